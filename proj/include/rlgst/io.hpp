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
// File formats:
//   circuits  JSON lines; a header object {"schema_version","kind"} followed
//             by one object {"id","gates"} per circuit.
//   counts    one JSON object: a "meta" entry {schema_version, shots, seed,
//             timestamp, exact} plus one entry per circuit id mapping outcome
//             bitstrings (qubit 1 leftmost) to counts (or probabilities in
//             exact mode).
//   report / predictions / bootstrap   single JSON documents.

#ifndef RLGST_IO_HPP
#define RLGST_IO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rlgst/circuits.hpp"
#include "rlgst/design.hpp"
#include "rlgst/errors.hpp"

namespace rlgst {

using Json = nlohmann::json;

struct GateSetConfig {
  std::string name;  // one of the standard names, or empty for explicit gates
  int n_qubits = 0;
  std::vector<std::pair<std::string, CMat>> unitaries;  // explicit mode
};

struct RandomNoiseConfig {
  double target_agsi;
  std::uint64_t seed;
};

struct TrueNoiseConfig {
  double spam_a = 0.0;
  std::optional<RandomNoiseConfig> random;
  std::map<std::string, std::vector<double>> explicit_params;  // per gate label
};

struct CircuitGenConfig {
  std::vector<int> lengths;
  int count_per_length = 1;
  bool include_null = true;
  std::uint64_t seed = 0;
};

struct TestCircuitConfig {
  std::vector<int> lengths;
  int count = 1;
  std::uint64_t seed = 0;
};

struct ExperimentConfig {
  GateSetConfig gate_set;
  std::optional<TrueNoiseConfig> true_noise;
  std::optional<std::string> counts_path;
  std::optional<CircuitGenConfig> circuits;
  std::optional<TestCircuitConfig> test_circuits;
  long long shots = 8192;
  std::optional<std::uint64_t> sampling_seed;
  double sv_tol_rel = 1e-10;
  double epsilon_estimate = 1e-4;
  int bootstrap_samples = 100;
  std::optional<std::uint64_t> bootstrap_seed;

  // Enforces the cross-field invariants (exactly one data source, seeds
  // present wherever randomness is consumed).
  void validate() const;
};

ExperimentConfig read_config(const std::string& path);
ExperimentConfig parse_config(const Json& j);

void write_circuits(const std::string& path, const std::vector<Circuit>& circuits);
std::vector<Circuit> read_circuits(const std::string& path);

struct CountsMeta {
  long long shots = 0;
  std::uint64_t seed = 0;
  std::string timestamp;
};

void write_counts(const std::string& path, const ProbabilityTable& table, int n_qubits,
                  const CountsMeta& meta);
ProbabilityTable read_counts(const std::string& path);

// e_hat <-> labeled JSON blocks ("gates" by label, "prep", "meas" by outcome
// bitstring).
Json noise_vector_to_json(const NoiseVector& e);
NoiseVector noise_vector_from_json(const Json& j, const ColumnLayout& layout);

void write_json(const std::string& path, const Json& j);
Json read_json(const std::string& path);

}  // namespace rlgst

#endif
