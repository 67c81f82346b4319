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
// Independent reference computations for the test suites.  Everything here
// goes through explicit Kraus/state-vector arithmetic rather than the
// library's closed-form constructors, so the two routes can check each other.

#ifndef RLGST_TESTS_ORACLES_HPP
#define RLGST_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "rlgst/pauli.hpp"
#include "rlgst/rng.hpp"

namespace rlgst::oracles {

using Cplx = std::complex<double>;

// Transfer matrix from Kraus operators: entry (a,b) = sum_k tr(sigma_a K sigma_b K^dag) / d.
inline Mat kraus_to_transfer(const std::vector<CMat>& kraus, int n_qubits) {
  const int s = pauli_count(n_qubits);
  const double d = static_cast<double>(hilbert_dim(n_qubits));
  Mat m = Mat::Zero(s, s);
  for (int b = 0; b < s; ++b) {
    CMat mapped = CMat::Zero(kraus[0].rows(), kraus[0].cols());
    for (const auto& k : kraus) mapped += k * sigma_matrix(n_qubits, b) * k.adjoint();
    for (int a = 0; a < s; ++a)
      m(a, b) = ((sigma_matrix(n_qubits, a) * mapped).trace() / d).real();
  }
  return m;
}

inline std::vector<CMat> amplitude_damping_kraus(double e0) {
  CMat k0 = CMat::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - e0);
  CMat k1 = CMat::Zero(2, 2);
  k1(0, 1) = std::sqrt(e0);
  return {k0, k1};
}

inline std::vector<CMat> pauli_channel_kraus(double e1, double e2, double e3) {
  return {std::sqrt(1.0 - e1 - e2 - e3) * sigma_matrix(1, 0), std::sqrt(e1) * sigma_matrix(1, 1),
          std::sqrt(e2) * sigma_matrix(1, 2), std::sqrt(e3) * sigma_matrix(1, 3)};
}

// q given row-major over (i,j) excluding (0,0); q00 from normalization.
inline std::vector<CMat> pauli2_kraus(const std::array<double, 15>& q) {
  double q00 = 1.0;
  for (double w : q) q00 -= w;
  std::vector<CMat> kraus;
  kraus.push_back(std::sqrt(q00) * sigma_matrix(2, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == 0 && j == 0) continue;
      kraus.push_back(std::sqrt(q[4 * i + j - 1]) * sigma_matrix(2, 4 * i + j));
    }
  return kraus;
}

inline CMat rotation_unitary(int axis_digit, double theta) {
  const Cplx i(0.0, 1.0);
  return std::cos(theta / 2) * sigma_matrix(1, 0) -
         i * std::sin(theta / 2) * sigma_matrix(1, axis_digit);
}

// Analytic rotation transfer matrix: cos/sin block on the two axes orthogonal
// to the rotation axis, written out entry by entry.
inline Mat rotation_transfer(int axis_digit, double theta) {
  Mat m = Mat::Identity(4, 4);
  const double c = std::cos(theta), s = std::sin(theta);
  // Cyclic pairs (u, v) with sigma_u -> cos sigma_u + sin sigma_v.
  int u = 0, v = 0;
  if (axis_digit == 1) u = 2, v = 3;  // about x: y -> z
  if (axis_digit == 2) u = 3, v = 1;  // about y: z -> x
  if (axis_digit == 3) u = 1, v = 2;  // about z: x -> y
  m(u, u) = c;
  m(v, v) = c;
  m(v, u) = s;
  m(u, v) = -s;
  return m;
}

// Gaussian via Box-Muller on the deterministic test generator.
inline double gaussian(Rng& rng) {
  const double u1 = rng.uniform01(), u2 = rng.uniform01();
  return std::sqrt(-2.0 * std::log(u1 + 1e-300)) * std::cos(2.0 * M_PI * u2);
}

inline CMat random_unitary(Rng& rng, int dim) {
  CMat g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Cplx(gaussian(rng), gaussian(rng));
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) q.col(c) *= r(c, c) / std::abs(r(c, c));
  return q;
}

inline CMat random_hermitian(Rng& rng, int dim) {
  CMat g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Cplx(gaussian(rng), gaussian(rng));
  return 0.5 * (g + g.adjoint()).eval();
}

// Born-rule reference in the state-vector picture: start from |0...0>, apply
// the given unitaries in order, return |<b|psi>|^2 for every bitstring b.
inline Vec born_probabilities(const std::vector<CMat>& unitaries, int n_qubits) {
  const int d = hilbert_dim(n_qubits);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d);
  psi(0) = 1.0;
  for (const auto& u : unitaries) psi = u * psi;
  Vec p(d);
  for (int b = 0; b < d; ++b) p(b) = std::norm(psi(b));
  return p;
}

}  // namespace rlgst::oracles

#endif
