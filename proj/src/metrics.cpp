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

#include "rlgst/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace rlgst {

double stat_distance(const Vec& p_hat, const Vec& p) {
  if (p_hat.size() != p.size()) throw std::invalid_argument("stat_distance: length mismatch");
  return 0.5 * (p_hat - p).cwiseAbs().sum();
}

double avg_fidelity(const Superop& g_ideal, const Superop& g_noisy) {
  if (g_ideal.n_qubits() != g_noisy.n_qubits())
    throw std::invalid_argument("avg_fidelity: dimension mismatch");
  const double d = static_cast<double>(g_ideal.dim());
  const double overlap = (g_ideal.matrix().transpose() * g_noisy.matrix()).trace();
  return (overlap + d) / (d * (d + 1.0));
}

double agsi(const GateSet& gs) {
  if (!gs.has_noise()) throw std::invalid_argument("agsi: no noise attached");
  double total = 0.0;
  for (int gamma = 0; gamma < gs.size(); ++gamma)
    total += 1.0 - avg_fidelity(gs.gate(gamma).ideal, gs.noisy(gamma));
  return total / gs.size();
}

double agsi_from_estimate(const GateSet& gs, const NoiseVector& e_hat) {
  if (!(layout_for(gs) == e_hat.layout))
    throw std::invalid_argument("agsi_from_estimate: layout mismatch");
  const int s = e_hat.layout.basis_size();
  double total = 0.0;
  for (int gamma = 0; gamma < gs.size(); ++gamma) {
    const Mat noisy = (Mat::Identity(s, s) + e_hat.gate_error(gamma)) * gs.gate(gamma).ideal.matrix();
    total += 1.0 - avg_fidelity(gs.gate(gamma).ideal, Superop(gs.n_qubits(), noisy));
  }
  return total / gs.size();
}

FitReport goodness_of_fit(const DesignSystem& ds, const NoiseVector& e_hat, int rank,
                          long long n_shots) {
  if (n_shots <= 0) throw std::invalid_argument("goodness_of_fit: need a positive shot count");
  if (rank > ds.C.cols()) throw std::invalid_argument("goodness_of_fit: rank exceeds columns");
  const int n_rows = static_cast<int>(ds.C.rows());
  const int dof = n_rows - rank;
  if (dof <= 0) throw std::invalid_argument("goodness_of_fit: no degrees of freedom left");

  // Variance floor: an empirical frequency of exactly 0 or 1 would give a
  // vanishing denominator.
  const double ns = static_cast<double>(n_shots);
  const double p_min = 1.0 / (2.0 * ns);
  const double sigma_floor = std::sqrt(p_min * (1.0 - p_min) / ns);

  const Vec p_hat = ds.p_ideal + ds.C * e_hat.values;
  Vec residuals(n_rows);
  double chi2 = 0.0;
  for (int i = 0; i < n_rows; ++i) {
    const double p = ds.p_measured(i);
    const double sigma = std::max(std::sqrt(std::max(p * (1.0 - p), 0.0) / ns), sigma_floor);
    residuals(i) = (p - p_hat(i)) / sigma;
    chi2 += residuals(i) * residuals(i);
  }
  const double n_sigma = (chi2 - dof) / std::sqrt(2.0 * dof);
  return FitReport{chi2, dof, n_sigma, std::move(residuals)};
}

}  // namespace rlgst
