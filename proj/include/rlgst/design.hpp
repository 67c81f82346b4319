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
// Assembly of the linear system  p_measured - p_ideal = C e.
//
// The noise-parameter column e is laid out as:
//   per gate gamma:   (d^2-1) * d^2 entries e_{gamma;ab}, a != 0, row-major
//   preparation:      d^2-1 entries eps_prep;a, a != 0
//   per retained outcome mu = 0..M-2:  d^2 entries eps_meas;mu,a
// The trace-preservation rows (a = 0) and the last outcome's measurement
// block are eliminated up front; one outcome row per circuit is dropped with
// them, keeping the system full-information at minimal size.

#ifndef RLGST_DESIGN_HPP
#define RLGST_DESIGN_HPP

#include <string>
#include <vector>

#include "rlgst/circuits.hpp"
#include "rlgst/gateset.hpp"

namespace rlgst {

// Bijection between columns and (symbol, indices).
class ColumnLayout {
 public:
  ColumnLayout(int n_qubits, std::vector<std::string> gate_labels, int n_outcomes);

  int n_qubits() const { return n_qubits_; }
  int n_gates() const { return static_cast<int>(gate_labels_.size()); }
  int n_outcomes() const { return n_outcomes_; }
  const std::vector<std::string>& gate_labels() const { return gate_labels_; }

  int basis_size() const { return pauli_count(n_qubits_); }         // d^2
  int gate_block_size() const { return (basis_size() - 1) * basis_size(); }
  int prep_block_size() const { return basis_size() - 1; }
  int meas_block_size() const { return basis_size(); }
  int size() const;  // total column count

  // Column of e_{gamma;ab}; requires a != 0.
  int gate_col(int gamma, int a, int b) const;
  int prep_col(int a) const;          // requires a != 0
  int meas_col(int mu, int a) const;  // requires mu <= M-2

  int gate_block_start(int gamma) const { return gamma * gate_block_size(); }
  int prep_block_start() const { return n_gates() * gate_block_size(); }
  int meas_block_start(int mu) const;

  // Human-readable label of a column, for exports.
  std::string column_label(int col) const;

  bool operator==(const ColumnLayout& other) const;

 private:
  int n_qubits_;
  std::vector<std::string> gate_labels_;
  int n_outcomes_;
};

ColumnLayout layout_for(const GateSet& gs);

// A packed noise-parameter vector over a layout.
struct NoiseVector {
  ColumnLayout layout;
  Vec values;

  // The d^2 x d^2 deviation map of gate `gamma` (first row zero).
  Mat gate_error(int gamma) const;
};

// Rows are (circuit, retained outcome) pairs in input order.
struct DesignSystem {
  ColumnLayout layout;
  std::vector<std::pair<std::string, int>> rows;  // (circuit id, outcome mu)
  Mat C;
  Vec p_ideal;
  Vec p_measured;
};

// The coefficient row of one (circuit, outcome) equation over the layout.
// For mu = M-1 (a row assemble() never uses), the eliminated measurement
// parameters are folded into the retained outcome blocks with sign -1.
Vec row_coefficients(const GateSet& gs, const Circuit& c, int mu);

DesignSystem assemble(const GateSet& gs, const std::vector<Circuit>& circuits,
                      const ProbabilityTable& measured);

struct LinearPrediction {
  Vec probs;              // all M outcomes, clipped to [0, 1]
  Vec raw;                // unclipped values; they sum to one by construction
  double clip_magnitude;  // total amount removed by clipping
};

// First-order prediction p_ideal + C_row . e for each retained outcome; the
// last outcome is one minus their sum.
LinearPrediction predict_linear(const GateSet& gs, const Circuit& c, const NoiseVector& e_hat);

// Packs the attached true noise (gate deviations, preparation and measurement
// errors) into a layout-ordered vector.
NoiseVector true_error_vector(const GateSet& gs, const ColumnLayout& layout);

}  // namespace rlgst

#endif
