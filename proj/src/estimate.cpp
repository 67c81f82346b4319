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

#include "rlgst/estimate.hpp"

#include <cmath>
#include <sstream>

#include "rlgst/metrics.hpp"
#include "rlgst/rng.hpp"

namespace rlgst {

namespace {

// BDCSVD is only worthwhile for large systems; fall back to Jacobi below its
// useful range and for very flat matrices.
struct SvdResult {
  Vec singular_values;
  Mat U;  // thin
  Mat V;  // full
};

SvdResult svd_thin_u_full_v(const Mat& m) {
  if (std::min(m.rows(), m.cols()) >= 32) {
    Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeFullV);
    return {svd.singularValues(), svd.matrixU(), svd.matrixV()};
  }
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeFullV);
  return {svd.singularValues(), svd.matrixU(), svd.matrixV()};
}

}  // namespace

EstimationReport solve(const DesignSystem& ds, double sv_tol_rel) {
  if (!(sv_tol_rel > 0.0 && sv_tol_rel < 1.0))
    throw std::invalid_argument("solve: sv_tol_rel must be in (0, 1)");
  if (ds.C.rows() == 0) throw DegenerateSystemError("solve: design system has no rows");

  const SvdResult svd = svd_thin_u_full_v(ds.C);
  const double lambda_max = svd.singular_values.size() > 0 ? svd.singular_values(0) : 0.0;
  if (!(lambda_max > 0.0)) throw DegenerateSystemError("solve: design matrix is zero");
  const double cutoff = sv_tol_rel * lambda_max;

  int rank = 0;
  for (int i = 0; i < svd.singular_values.size(); ++i)
    if (svd.singular_values(i) >= cutoff) ++rank;
  if (rank == 0) throw DegenerateSystemError("solve: all singular values below threshold");

  // e_hat = W D^-1 V^T (p_measured - p_ideal), restricted to the kept part.
  const Vec delta = ds.p_measured - ds.p_ideal;
  const Vec z = svd.U.leftCols(rank).transpose() * delta;
  const Vec scaled = z.array() / svd.singular_values.head(rank).array();
  Vec e_hat = svd.V.leftCols(rank) * scaled;

  const int n_cols = static_cast<int>(ds.C.cols());
  const int d2 = ds.layout.basis_size();

  EstimationReport report{
      NoiseVector{ds.layout, std::move(e_hat)},
      svd.singular_values,
      rank,
      Mat(svd.V.rightCols(n_cols - rank)),
      {},
      d2 * (d2 - 1),
      sv_tol_rel,
  };
  return report;
}

void GaugeElement::validate(double tol) const {
  if (Q.rows() != Q.cols()) throw std::invalid_argument("GaugeElement: Q must be square");
  const double row0 = Q.row(0).cwiseAbs().maxCoeff();
  if (row0 > tol) {
    std::ostringstream msg;
    msg << "GaugeElement: first row not zero (max " << row0 << ")";
    throw std::invalid_argument(msg.str());
  }
}

NoiseVector gauge_vector(const GateSet& gs, const ColumnLayout& layout, const GaugeElement& q) {
  q.validate();
  const int s = layout.basis_size();
  if (q.Q.rows() != s) throw std::invalid_argument("gauge_vector: Q dimension mismatch");

  NoiseVector out{layout, Vec::Zero(layout.size())};
  for (int gamma = 0; gamma < gs.size(); ++gamma) {
    const Mat& g = gs.gate(gamma).ideal.matrix();
    Mat delta = q.Q - g * q.Q * g.transpose();
    // The first row vanishes identically because g is TP and Q's is zero;
    // verify the float residue before dropping it.
    const double row0 = delta.row(0).cwiseAbs().maxCoeff();
    if (row0 > 1e-10)
      throw std::runtime_error("gauge_vector: nonzero first row in gate delta");
    for (int a = 1; a < s; ++a)
      for (int b = 0; b < s; ++b)
        out.values(layout.gate_col(gamma, a, b)) = delta(a, b);
  }

  const Vec prep_delta = q.Q * gs.spam_ideal().rho.coords;
  for (int a = 1; a < s; ++a) out.values(layout.prep_col(a)) = prep_delta(a);

  for (int mu = 0; mu <= layout.n_outcomes() - 2; ++mu) {
    const Eigen::RowVectorXd meas_delta =
        -(gs.spam_ideal().effects[mu].coords.transpose() * q.Q);
    for (int a = 0; a < s; ++a) out.values(layout.meas_col(mu, a)) = meas_delta(a);
  }
  return out;
}

GaugeMembershipSolver::GaugeMembershipSolver(const GateSet& gs, const ColumnLayout& layout)
    : basis_size_(layout.basis_size()) {
  const int s = basis_size_;
  const int unknowns = (s - 1) * s;  // rows 1..s-1 of Q, row-major
  T_ = Mat(layout.size(), unknowns);
  GaugeElement q{Mat::Zero(s, s)};
  for (int a = 1; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      q.Q(a, b) = 1.0;
      T_.col((a - 1) * s + b) = gauge_vector(gs, layout, q).values;
      q.Q(a, b) = 0.0;
    }
  qr_.compute(T_);
}

GaugeMembership GaugeMembershipSolver::test(const Vec& alpha, double tol) const {
  const double norm = alpha.norm();
  if (!(norm > 0.0)) return {true, 0.0, Mat::Zero(basis_size_, basis_size_)};

  const Vec x = qr_.solve(alpha);
  const double residual = (T_ * x - alpha).norm() / norm;
  GaugeMembership out{residual < tol, residual, std::nullopt};
  if (out.is_gauge) {
    Mat q = Mat::Zero(basis_size_, basis_size_);
    for (int a = 1; a < basis_size_; ++a)
      for (int b = 0; b < basis_size_; ++b) q(a, b) = x((a - 1) * basis_size_ + b);
    out.q_solution = std::move(q);
  }
  return out;
}

GaugeMembership gauge_membership(const GateSet& gs, const ColumnLayout& layout, const Vec& alpha,
                                 double tol) {
  return GaugeMembershipSolver(gs, layout).test(alpha, tol);
}

void audit_gauge(EstimationReport& report, const GateSet& gs, double tol) {
  const GaugeMembershipSolver solver(gs, report.e_hat.layout);
  report.gauge_diagnostics.clear();
  report.gauge_diagnostics.reserve(report.null_dim());
  for (int j = 0; j < report.null_dim(); ++j) {
    const GaugeMembership m = solver.test(report.null_basis.col(j), tol);
    report.gauge_diagnostics.push_back({m.is_gauge, m.residual});
  }
}

NullSpaceAudit null_space_audit(const EstimationReport& report, const GateSet& gs,
                                const CompletenessReport& completeness) {
  NullSpaceAudit audit{report.null_dim(), completeness.complete, 0, ""};
  if (!completeness.complete) {
    std::ostringstream os;
    os << "gate set is tomographically incomplete (reached rank " << completeness.reached_rank
       << " of " << pauli_count(gs.n_qubits()) << "); no expected null dimension applies";
    audit.advice = os.str();
    return audit;
  }
  audit.extra_null_dim = report.null_dim() - report.expected_gauge_dim;
  if (audit.extra_null_dim > 0) {
    std::ostringstream os;
    os << audit.extra_null_dim << " zero singular value(s) beyond the " << report.expected_gauge_dim
       << " gauge directions; add more circuits (including short or null circuits) to rule out "
          "unlucky sampling";
    audit.advice = os.str();
  }
  return audit;
}

BootstrapResult bootstrap(const GateSet& gs, const std::vector<Circuit>& circuits,
                          const ProbabilityTable& measured, int n_replicates,
                          std::uint64_t rng_seed, double sv_tol_rel) {
  if (n_replicates < 1) throw std::invalid_argument("bootstrap: need at least one replicate");
  if (measured.exact())
    throw std::invalid_argument("bootstrap: exact probabilities cannot be resampled");

  const DesignSystem ds = assemble(gs, circuits, measured);
  const SvdResult svd = svd_thin_u_full_v(ds.C);
  const double lambda_max = svd.singular_values.size() > 0 ? svd.singular_values(0) : 0.0;
  if (!(lambda_max > 0.0)) throw DegenerateSystemError("bootstrap: design matrix is zero");
  int rank = 0;
  for (int i = 0; i < svd.singular_values.size(); ++i)
    if (svd.singular_values(i) >= sv_tol_rel * lambda_max) ++rank;
  if (rank == 0) throw DegenerateSystemError("bootstrap: all singular values below threshold");

  const int retained = gs.n_outcomes() - 1;
  BootstrapResult result;
  result.replicates.reserve(n_replicates);

  for (int rep = 0; rep < n_replicates; ++rep) {
    Vec p_resampled(ds.C.rows());
    int r = 0;
    for (const auto& c : circuits) {
      const Vec& p_emp = measured.probs_for(c.id);
      Rng rng(derive_seed(rng_seed, "bootstrap:" + c.id, static_cast<std::uint64_t>(rep)));
      std::vector<double> probs(p_emp.data(), p_emp.data() + p_emp.size());
      const auto counts = multinomial(rng, probs, measured.shots);
      for (int mu = 0; mu < retained; ++mu, ++r)
        p_resampled(r) = static_cast<double>(counts[mu]) / static_cast<double>(measured.shots);
    }
    const Vec delta = p_resampled - ds.p_ideal;
    const Vec z = svd.U.leftCols(rank).transpose() * delta;
    const Vec scaled = z.array() / svd.singular_values.head(rank).array();
    NoiseVector e{ds.layout, svd.V.leftCols(rank) * scaled};
    result.replicates.push_back({e.values, agsi_from_estimate(gs, e)});
  }

  double mean = 0.0;
  for (const auto& rep : result.replicates) mean += rep.agsi;
  mean /= n_replicates;
  double var = 0.0;
  for (const auto& rep : result.replicates) var += (rep.agsi - mean) * (rep.agsi - mean);
  result.agsi_mean = mean;
  result.agsi_std = n_replicates > 1 ? std::sqrt(var / (n_replicates - 1)) : 0.0;
  return result;
}

}  // namespace rlgst
