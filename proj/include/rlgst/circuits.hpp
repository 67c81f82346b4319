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

#ifndef RLGST_CIRCUITS_HPP
#define RLGST_CIRCUITS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rlgst/gateset.hpp"

namespace rlgst {

// A gate-label sequence; gates[0] is applied first.  Length 0 is the null
// circuit (preparation followed immediately by readout).
struct Circuit {
  std::string id;
  std::vector<std::string> gates;

  int length() const { return static_cast<int>(gates.size()); }
};

// Measured (or exactly computed) outcome data per circuit.  Outcome index mu
// is the integer value of the outcome bitstring, qubit 1 leftmost.
struct ProbabilityTable {
  long long shots = 0;  // 0 means exact probabilities (infinite shots)
  std::map<std::string, std::vector<long long>> counts;  // present when shots > 0
  std::map<std::string, Vec> probs;                      // frequencies or exact values

  bool exact() const { return shots == 0; }
  const Vec& probs_for(const std::string& circuit_id) const;
  void validate() const;
};

// Uniform-random circuits: `count_per_length` draws for each entry of
// `lengths`, exact duplicate sequences discarded without replacement, the
// null circuit appended last when requested.  Deterministic given the seed.
std::vector<Circuit> random_circuits(const GateSet& gs, const std::vector<int>& lengths,
                                     int count_per_length, std::uint64_t rng_seed,
                                     bool include_null, const std::string& id_prefix = "c");

// `total_count` circuits whose lengths are drawn uniformly from `lengths`;
// used for test-circuit sets.
std::vector<Circuit> random_circuits_mixed(const GateSet& gs, const std::vector<int>& lengths,
                                           int total_count, std::uint64_t rng_seed,
                                           const std::string& id_prefix = "t");

// Outcome probabilities of one circuit by repeated matrix-vector products;
// never forms the full circuit superoperator.
Vec simulate(const GateSet& gs, const Circuit& c, bool use_noisy);

// One multinomial draw of N_s shots.  Throws on invalid probability vectors.
std::vector<long long> sample_counts(const Vec& p, long long n_shots, std::uint64_t rng_seed);

// Flags circuits whose length times the a-priori noise strength exceeds the
// linear-regime threshold.
std::vector<std::string> length_budget_check(const std::vector<Circuit>& circuits,
                                             double epsilon_estimate, double threshold = 0.1);

// Outcome index <-> bitstring (qubit 1 leftmost).
std::string outcome_bitstring(int outcome, int n_qubits);
int outcome_index(const std::string& bitstring);

}  // namespace rlgst

#endif
