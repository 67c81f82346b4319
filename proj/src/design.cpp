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

#include "rlgst/design.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace rlgst {

ColumnLayout::ColumnLayout(int n_qubits, std::vector<std::string> gate_labels, int n_outcomes)
    : n_qubits_(n_qubits), gate_labels_(std::move(gate_labels)), n_outcomes_(n_outcomes) {
  if (gate_labels_.empty()) throw std::invalid_argument("ColumnLayout: need gates");
  if (n_outcomes_ < 2) throw std::invalid_argument("ColumnLayout: need at least two outcomes");
}

int ColumnLayout::size() const {
  return n_gates() * gate_block_size() + prep_block_size() +
         (n_outcomes_ - 1) * meas_block_size();
}

int ColumnLayout::gate_col(int gamma, int a, int b) const {
  assert(gamma >= 0 && gamma < n_gates());
  assert(a >= 1 && a < basis_size() && b >= 0 && b < basis_size());
  return gate_block_start(gamma) + (a - 1) * basis_size() + b;
}

int ColumnLayout::prep_col(int a) const {
  assert(a >= 1 && a < basis_size());
  return prep_block_start() + (a - 1);
}

int ColumnLayout::meas_block_start(int mu) const {
  assert(mu >= 0 && mu <= n_outcomes_ - 2);
  return prep_block_start() + prep_block_size() + mu * meas_block_size();
}

int ColumnLayout::meas_col(int mu, int a) const { return meas_block_start(mu) + a; }

std::string ColumnLayout::column_label(int col) const {
  std::ostringstream os;
  const int gb = gate_block_size();
  if (col < n_gates() * gb) {
    const int gamma = col / gb;
    const int rest = col % gb;
    os << "e[" << gate_labels_[gamma] << ";" << (rest / basis_size() + 1) << ","
       << rest % basis_size() << "]";
    return os.str();
  }
  col -= n_gates() * gb;
  if (col < prep_block_size()) {
    os << "eps_prep[" << (col + 1) << "]";
    return os.str();
  }
  col -= prep_block_size();
  os << "eps_meas[" << outcome_bitstring(col / meas_block_size(), n_qubits_) << ";"
     << col % meas_block_size() << "]";
  return os.str();
}

bool ColumnLayout::operator==(const ColumnLayout& other) const {
  return n_qubits_ == other.n_qubits_ && gate_labels_ == other.gate_labels_ &&
         n_outcomes_ == other.n_outcomes_;
}

ColumnLayout layout_for(const GateSet& gs) {
  std::vector<std::string> labels;
  labels.reserve(gs.size());
  for (const auto& g : gs.gates()) labels.push_back(g.label);
  return ColumnLayout(gs.n_qubits(), std::move(labels), gs.n_outcomes());
}

Mat NoiseVector::gate_error(int gamma) const {
  const int s = layout.basis_size();
  Mat e = Mat::Zero(s, s);
  for (int a = 1; a < s; ++a)
    for (int b = 0; b < s; ++b) e(a, b) = values(layout.gate_col(gamma, a, b));
  return e;
}

Vec row_coefficients(const GateSet& gs, const Circuit& c, int mu) {
  const ColumnLayout layout = layout_for(gs);
  const int s = layout.basis_size();
  const int n_outcomes = gs.n_outcomes();
  if (mu < 0 || mu >= n_outcomes) throw std::invalid_argument("row_coefficients: bad outcome");
  const int length = c.length();

  // Forward sweep: states after applying the first k ideal gates.
  std::vector<Vec> fwd(length + 1);
  fwd[0] = gs.spam_ideal().rho.coords;
  std::vector<int> gate_at(length);
  for (int k = 0; k < length; ++k) {
    gate_at[k] = gs.index_of(c.gates[k]);
    fwd[k + 1] = gs.gate(gate_at[k]).ideal.matrix() * fwd[k];
  }

  // Backward sweep: effect row pulled through the remaining gates.
  std::vector<Eigen::RowVectorXd> back(length + 1);
  back[length] = gs.spam_ideal().effects[mu].coords.transpose();
  for (int k = length; k >= 1; --k)
    back[k - 1] = back[k] * gs.gate(gate_at[k - 1]).ideal.matrix();

  Vec row = Vec::Zero(layout.size());

  // Gate blocks: one error insertion at each position of the matching gate.
  for (int k = 1; k <= length; ++k) {
    const int gamma = gate_at[k - 1];
    const int start = layout.gate_block_start(gamma);
    for (int a = 1; a < s; ++a) {
      const double ba = back[k](a);
      if (ba == 0.0) continue;
      row.segment(start + (a - 1) * s, s) += ba * fwd[k];
    }
  }

  // Preparation block: effect row through the whole circuit, a != 0.
  row.segment(layout.prep_block_start(), s - 1) = back[0].segment(1, s - 1).transpose();

  // Measurement block: state through the whole circuit, in this outcome's
  // block; the eliminated last outcome folds in with sign -1 everywhere.
  if (mu <= n_outcomes - 2) {
    row.segment(layout.meas_block_start(mu), s) = fwd[length];
  } else {
    for (int m = 0; m <= n_outcomes - 2; ++m)
      row.segment(layout.meas_block_start(m), s) = -fwd[length];
  }
  return row;
}

DesignSystem assemble(const GateSet& gs, const std::vector<Circuit>& circuits,
                      const ProbabilityTable& measured) {
  const ColumnLayout layout = layout_for(gs);
  const int retained = gs.n_outcomes() - 1;
  const int n_rows = static_cast<int>(circuits.size()) * retained;

  DesignSystem ds{layout, {}, Mat(n_rows, layout.size()), Vec(n_rows), Vec(n_rows)};
  ds.rows.reserve(n_rows);

  int r = 0;
  for (const auto& c : circuits) {
    const Vec p = simulate(gs, c, /*use_noisy=*/false);
    const Vec& p_meas = measured.probs_for(c.id);
    if (p_meas.size() != gs.n_outcomes())
      throw std::invalid_argument("assemble: outcome count mismatch for circuit '" + c.id + "'");
    for (int mu = 0; mu < retained; ++mu, ++r) {
      ds.rows.emplace_back(c.id, mu);
      ds.C.row(r) = row_coefficients(gs, c, mu).transpose();
      ds.p_ideal(r) = p(mu);
      ds.p_measured(r) = p_meas(mu);
    }
  }
  return ds;
}

LinearPrediction predict_linear(const GateSet& gs, const Circuit& c, const NoiseVector& e_hat) {
  if (!(layout_for(gs) == e_hat.layout))
    throw std::invalid_argument("predict_linear: layout mismatch");
  const int n_outcomes = gs.n_outcomes();
  const Vec p_ideal = simulate(gs, c, /*use_noisy=*/false);

  Vec raw(n_outcomes);
  double sum = 0.0;
  for (int mu = 0; mu < n_outcomes - 1; ++mu) {
    raw(mu) = p_ideal(mu) + row_coefficients(gs, c, mu).dot(e_hat.values);
    sum += raw(mu);
  }
  raw(n_outcomes - 1) = 1.0 - sum;

  Vec p = raw;
  double clipped = 0.0;
  for (int mu = 0; mu < n_outcomes; ++mu) {
    if (p(mu) < 0.0) {
      clipped += -p(mu);
      p(mu) = 0.0;
    } else if (p(mu) > 1.0) {
      clipped += p(mu) - 1.0;
      p(mu) = 1.0;
    }
  }
  return LinearPrediction{std::move(p), std::move(raw), clipped};
}

NoiseVector true_error_vector(const GateSet& gs, const ColumnLayout& layout) {
  if (!(layout_for(gs) == layout))
    throw std::invalid_argument("true_error_vector: layout mismatch");
  if (!gs.has_noise()) throw std::invalid_argument("true_error_vector: no noise attached");
  const int s = layout.basis_size();

  NoiseVector out{layout, Vec::Zero(layout.size())};
  const auto errors = error_maps(gs);
  for (int gamma = 0; gamma < gs.size(); ++gamma)
    for (int a = 1; a < s; ++a)
      for (int b = 0; b < s; ++b)
        out.values(layout.gate_col(gamma, a, b)) = errors[gamma].matrix(a, b);

  const Vec prep_delta = gs.spam().rho.coords - gs.spam_ideal().rho.coords;
  for (int a = 1; a < s; ++a) out.values(layout.prep_col(a)) = prep_delta(a);

  for (int mu = 0; mu <= layout.n_outcomes() - 2; ++mu) {
    const Vec meas_delta = gs.spam().effects[mu].coords - gs.spam_ideal().effects[mu].coords;
    for (int a = 0; a < s; ++a) out.values(layout.meas_col(mu, a)) = meas_delta(a);
  }
  return out;
}

}  // namespace rlgst
