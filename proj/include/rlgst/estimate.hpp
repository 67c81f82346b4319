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
// SVD pseudoinversion of the design system, null-space and gauge analysis,
// and parametric bootstrap resampling.

#ifndef RLGST_ESTIMATE_HPP
#define RLGST_ESTIMATE_HPP

#include <Eigen/SVD>
#include <optional>
#include <string>
#include <vector>

#include "rlgst/design.hpp"

namespace rlgst {

// Thrown when every singular value falls below the zero threshold.
struct DegenerateSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GaugeDiagnostic {
  bool is_gauge;
  double residual;  // relative least-squares residual of the membership fit
};

struct EstimationReport {
  NoiseVector e_hat;
  Vec singular_values;  // descending
  int rank;
  Mat null_basis;  // orthonormal columns spanning null(C)
  std::vector<GaugeDiagnostic> gauge_diagnostics;  // one per null-basis column
  int expected_gauge_dim;  // d^2 (d^2 - 1)
  double sv_tol_rel;

  int null_dim() const { return static_cast<int>(null_basis.cols()); }
};

// Pseudoinverse solve: singular values below sv_tol_rel * max are treated as
// zero.  No completely-positive constraint is imposed on the estimate.
EstimationReport solve(const DesignSystem& ds, double sv_tol_rel = 1e-10);

// A gamma-independent map with zero first row, generating one direction of
// gauge freedom.
struct GaugeElement {
  Mat Q;

  // Throws unless the first row vanishes within tol.
  void validate(double tol = 1e-12) const;
};

// Packs the parameter shift induced by Q: per gate Q - g Q g^T, preparation
// shift Q|rho>>, measurement shifts -<<P_mu|Q for retained outcomes.
NoiseVector gauge_vector(const GateSet& gs, const ColumnLayout& layout, const GaugeElement& q);

struct GaugeMembership {
  bool is_gauge;
  double residual;
  std::optional<Mat> q_solution;
};

// Decides whether a parameter direction alpha is generated by some gauge
// element, by least squares over vectorized Q.  The solver form factors the
// membership operator once and can test many directions cheaply.
class GaugeMembershipSolver {
 public:
  GaugeMembershipSolver(const GateSet& gs, const ColumnLayout& layout);

  GaugeMembership test(const Vec& alpha, double tol = 1e-8) const;

 private:
  int basis_size_;
  Mat T_;  // maps vec(Q) (zero first row dropped) to the packed shift
  Eigen::ColPivHouseholderQR<Mat> qr_;
};

GaugeMembership gauge_membership(const GateSet& gs, const ColumnLayout& layout, const Vec& alpha,
                                 double tol = 1e-8);

// Fills gauge_diagnostics for every null-basis column.
void audit_gauge(EstimationReport& report, const GateSet& gs, double tol = 1e-8);

struct NullSpaceAudit {
  int null_dim;
  bool expectation_applies;  // only for tomographically complete gate sets
  int extra_null_dim;        // null_dim - d^2 (d^2 - 1) when applicable
  std::string advice;
};

NullSpaceAudit null_space_audit(const EstimationReport& report, const GateSet& gs,
                                const CompletenessReport& completeness);

struct BootstrapReplicate {
  Vec e_hat;
  double agsi;
};

struct BootstrapResult {
  std::vector<BootstrapReplicate> replicates;
  double agsi_mean;
  double agsi_std;
};

// Parametric bootstrap: redraw counts from the empirical frequencies per
// circuit, re-solve (the design matrix is fixed, so the factorization is
// reused), and summarize the estimated gate-set infidelity.
BootstrapResult bootstrap(const GateSet& gs, const std::vector<Circuit>& circuits,
                          const ProbabilityTable& measured, int n_replicates,
                          std::uint64_t rng_seed, double sv_tol_rel = 1e-10);

}  // namespace rlgst

#endif
