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

#ifndef RLGST_METRICS_HPP
#define RLGST_METRICS_HPP

#include "rlgst/design.hpp"

namespace rlgst {

// Statistical distance: half the l1 distance between outcome distributions.
double stat_distance(const Vec& p_hat, const Vec& p);

// Haar-average gate fidelity (tr[g^T g'] + d) / (d (d + 1)).
double avg_fidelity(const Superop& g_ideal, const Superop& g_noisy);

// Average gate set infidelity over the attached noisy gates.
double agsi(const GateSet& gs);

// Average gate set infidelity of an estimate; reconstructs each gate's
// deviation block from the packed vector.  May be negative, since no
// complete-positivity constraint is imposed on estimates.
double agsi_from_estimate(const GateSet& gs, const NoiseVector& e_hat);

struct FitReport {
  double chi2;
  int dof;         // retained rows minus the rank used in estimation
  double n_sigma;  // (chi2 - dof) / sqrt(2 dof)
  Vec residuals;   // standardized per-row residuals
};

// Chi-squared goodness of fit of the linear prediction against measured
// frequencies, with per-row binomial standard deviations floored at the
// half-shot level to keep deterministic rows finite.
FitReport goodness_of_fit(const DesignSystem& ds, const NoiseVector& e_hat, int rank,
                          long long n_shots);

}  // namespace rlgst

#endif
