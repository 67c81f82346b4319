// Copyright 2026 The rlgst authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// End-to-end orchestration used by the command-line tool and by tests.

#ifndef RLGST_PIPELINE_HPP
#define RLGST_PIPELINE_HPP

#include "rlgst/estimate.hpp"
#include "rlgst/io.hpp"
#include "rlgst/metrics.hpp"

namespace rlgst {

GateSet build_gateset(const GateSetConfig& cfg);

// A simulated device: the ideal gate set with the configured noise attached.
struct TruthModel {
  GateSet noisy;
  double agsi_true;
  double scale;         // calibrated parameter scale; 0 in explicit mode
  bool random_sampling;  // true when parameters were drawn and calibrated
};

// Draws per-gate noise parameters (uniform at a common scale) and bisects the
// scale until the true gate-set infidelity hits the requested target, or
// applies explicitly given parameters.
TruthModel build_truth(const GateSet& ideal, const TrueNoiseConfig& cfg);

// Per-gate noise maps at a fixed scale, from unit draws seeded per gate.
std::vector<Superop> noise_maps_at_scale(const GateSet& ideal, std::uint64_t seed, double scale);

std::vector<Circuit> make_tomographic_circuits(const GateSet& gs, const CircuitGenConfig& cfg);
std::vector<Circuit> make_test_circuits(const GateSet& gs, const TestCircuitConfig& cfg);

// Exact noisy probabilities, sampled at config.shots (exact when shots = 0).
ProbabilityTable simulate_counts(const TruthModel& truth, const std::vector<Circuit>& circuits,
                                 long long shots, std::uint64_t sampling_seed);

struct EstimateOutput {
  DesignSystem design;
  EstimationReport estimate;
  CompletenessReport completeness;
  NullSpaceAudit audit;
  Json report;  // the serialized report document
};

EstimateOutput run_estimate(const ExperimentConfig& cfg, const std::vector<Circuit>& circuits,
                            const ProbabilityTable& measured);

Json run_predict(const ExperimentConfig& cfg, const Json& report,
                 const std::vector<Circuit>& test_circuits, const ProbabilityTable* reference);

Json run_bootstrap(const ExperimentConfig& cfg, const std::vector<Circuit>& circuits,
                   const ProbabilityTable& measured, int n_replicates, std::uint64_t seed);

// gen-circuits + simulate + estimate (+ predict when test circuits are
// configured), chained through files under out_dir exactly as the individual
// commands would do.  Returns the report path.
std::string run_full_pipeline(const ExperimentConfig& cfg, const std::string& out_dir);

// Diagnostics dump of the assembled system (C, probabilities, labels).
Json design_to_json(const DesignSystem& ds);

}  // namespace rlgst

#endif
