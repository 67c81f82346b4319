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

#ifndef RLGST_GATESET_HPP
#define RLGST_GATESET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rlgst/channels.hpp"
#include "rlgst/pauli.hpp"

namespace rlgst {

struct Gate {
  std::string label;
  Superop ideal;
};

// A labeled gate collection with its SPAM models and, optionally, the noisy
// implementations of each gate.  Immutable after construction.
class GateSet {
 public:
  GateSet(int n_qubits, std::vector<Gate> gates, SpamModel spam_ideal);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return hilbert_dim(n_qubits_); }
  int size() const { return static_cast<int>(gates_.size()); }  // Gamma
  int n_outcomes() const { return spam_ideal_.n_outcomes(); }

  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(int idx) const { return gates_.at(idx); }
  int index_of(const std::string& label) const;  // throws on unknown label

  bool has_noise() const { return !noisy_.empty(); }
  const Superop& noisy(int idx) const;

  const SpamModel& spam_ideal() const { return spam_ideal_; }
  const SpamModel& spam() const { return has_noise() ? spam_ : spam_ideal_; }

  // Returns a copy with noisy gates (noise applied after the ideal gate)
  // and the noisy SPAM model attached.
  GateSet with_noise(const std::vector<Superop>& noise_maps, SpamModel spam_noisy) const;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
  std::map<std::string, int> index_;
  std::vector<Superop> noisy_;
  SpamModel spam_ideal_;
  SpamModel spam_;
};

// Deviation of a noisy gate from its ideal: e = noisy * ideal^T - identity.
// The first row is zeroed exactly after a tolerance check.
struct ErrorMap {
  std::string label;
  Mat matrix;
};

enum class StandardGateSet { PauliXYZ, IX90Y90, IHT, TwoQubitIXYCnot };

// The four built-in gate sets.  The two-qubit set holds the nine tensor
// combinations g_ij (i,j in {0,x,y}) plus CNOT with qubit 1 as control.
GateSet standard_gateset(StandardGateSet which);
GateSet standard_gateset(const std::string& name);  // by config name

// attach_noise(gs, ...) == gs.with_noise(...); free-function form.
GateSet attach_noise(const GateSet& gs, const std::vector<Superop>& noise_maps,
                     SpamModel spam_noisy);

// Per-gate deviation maps of an attached noise model.
std::vector<ErrorMap> error_maps(const GateSet& gs, double tol = 1e-8);

struct CompletenessReport {
  bool complete;
  int reached_rank;
  int depth_used;
};

// Grows the span of states reachable from the ideal preparation by gate words
// of increasing length until the rank saturates (or max_depth is hit).
CompletenessReport completeness_check(const GateSet& gs, int max_depth);

}  // namespace rlgst

#endif
