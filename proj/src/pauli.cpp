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

#include "rlgst/pauli.hpp"

#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace rlgst {

namespace {

using Cplx = std::complex<double>;

const CMat& single_qubit_sigma(int digit) {
  static const CMat sigmas[4] = {
      (CMat(2, 2) << 1, 0, 0, 1).finished(),
      (CMat(2, 2) << 0, 1, 1, 0).finished(),
      (CMat(2, 2) << 0, Cplx(0, -1), Cplx(0, 1), 0).finished(),
      (CMat(2, 2) << 1, 0, 0, -1).finished(),
  };
  return sigmas[digit];
}

}  // namespace

PauliIndex PauliIndex::from_digits(const std::vector<int>& digits) {
  if (digits.empty()) throw std::invalid_argument("PauliIndex: need at least one digit");
  int linear = 0;
  for (int d : digits) {
    if (d < 0 || d > 3) throw std::invalid_argument("PauliIndex: digit out of range");
    linear = linear * 4 + d;
  }
  return PauliIndex{static_cast<int>(digits.size()), linear};
}

std::vector<int> PauliIndex::digits() const {
  std::vector<int> out(n_qubits);
  int rest = linear;
  for (int k = n_qubits - 1; k >= 0; --k) {
    out[k] = rest & 3;
    rest >>= 2;
  }
  return out;
}

CMat sigma_matrix(int n_qubits, int linear_index) {
  if (n_qubits < 1) throw std::invalid_argument("sigma_matrix: n_qubits must be >= 1");
  if (linear_index < 0 || linear_index >= pauli_count(n_qubits))
    throw std::invalid_argument("sigma_matrix: index out of range");
  const auto digits = PauliIndex{n_qubits, linear_index}.digits();
  CMat m = single_qubit_sigma(digits[0]);
  for (int k = 1; k < n_qubits; ++k)
    m = Eigen::kroneckerProduct(m, single_qubit_sigma(digits[k])).eval();
  return m;
}

Superop::Superop(int n_qubits, Mat matrix) : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  const int s = pauli_count(n_qubits_);
  if (matrix_.rows() != s || matrix_.cols() != s)
    throw std::invalid_argument("Superop: matrix dimension does not match qubit count");
  if (!matrix_.allFinite()) throw std::invalid_argument("Superop: non-finite entries");
}

Superop Superop::identity(int n_qubits) {
  const int s = pauli_count(n_qubits);
  return Superop(n_qubits, Mat::Identity(s, s));
}

StateVec vectorize(const CMat& op, double tol) {
  if (op.rows() != op.cols()) throw std::invalid_argument("vectorize: operator must be square");
  const double asym = (op - op.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol) {
    std::ostringstream msg;
    msg << "vectorize: operator not hermitian, max asymmetry " << asym;
    throw std::invalid_argument(msg.str());
  }
  int n = 0;
  while (hilbert_dim(n) < op.rows()) ++n;
  if (hilbert_dim(n) != op.rows())
    throw std::invalid_argument("vectorize: dimension is not a power of 2");

  const double rd = std::sqrt(static_cast<double>(op.rows()));
  Vec coords(pauli_count(n));
  for (int a = 0; a < pauli_count(n); ++a) {
    const Cplx t = (sigma_matrix(n, a) * op).trace();
    coords(a) = t.real() / rd;  // imaginary residue is bounded by the asymmetry
  }
  return StateVec{n, coords};
}

EffectVec effect_from_operator(const CMat& op, double tol) {
  const StateVec v = vectorize(op, tol);
  return EffectVec{v.n_qubits, v.coords};
}

EffectVec identity_effect(int n_qubits) {
  Vec coords = Vec::Zero(pauli_count(n_qubits));
  coords(0) = std::sqrt(static_cast<double>(hilbert_dim(n_qubits)));
  return EffectVec{n_qubits, coords};
}

Superop unitary_to_superop(const CMat& u, double tol) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unitary_to_superop: matrix must be square");
  const double dev = (u.adjoint() * u - CMat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (dev > tol) {
    std::ostringstream msg;
    msg << "unitary_to_superop: input not unitary, max deviation " << dev;
    throw std::invalid_argument(msg.str());
  }
  int n = 0;
  while (hilbert_dim(n) < u.rows()) ++n;
  if (hilbert_dim(n) != u.rows())
    throw std::invalid_argument("unitary_to_superop: dimension is not a power of 2");

  const int s = pauli_count(n);
  const double d = static_cast<double>(u.rows());
  Mat m(s, s);
  double imag_residue = 0.0;
  for (int b = 0; b < s; ++b) {
    const CMat conj = u * sigma_matrix(n, b) * u.adjoint();
    for (int a = 0; a < s; ++a) {
      const Cplx t = (sigma_matrix(n, a) * conj).trace();
      m(a, b) = t.real() / d;
      imag_residue = std::max(imag_residue, std::abs(t.imag()) / d);
    }
  }
  // Hermiticity preservation makes all entries real; the residue is float noise.
  if (imag_residue > 1e-12) {
    std::ostringstream msg;
    msg << "unitary_to_superop: imaginary residue " << imag_residue << " above 1e-12";
    throw std::invalid_argument(msg.str());
  }
  return Superop(n, std::move(m));
}

Superop compose(const Superop& g2, const Superop& g1) {
  if (g2.n_qubits() != g1.n_qubits())
    throw std::invalid_argument("compose: qubit counts differ");
  return Superop(g2.n_qubits(), g2.matrix() * g1.matrix());
}

Superop tensor(const Superop& ga, const Superop& gb) {
  return Superop(ga.n_qubits() + gb.n_qubits(),
                 Eigen::kroneckerProduct(ga.matrix(), gb.matrix()));
}

StateVec tensor(const StateVec& a, const StateVec& b) {
  return StateVec{a.n_qubits + b.n_qubits,
                  Eigen::kroneckerProduct(a.coords, b.coords).eval()};
}

EffectVec tensor(const EffectVec& a, const EffectVec& b) {
  return EffectVec{a.n_qubits + b.n_qubits,
                   Eigen::kroneckerProduct(a.coords, b.coords).eval()};
}

StructureReport check_structure(const Superop& g, double tol) {
  const Mat& m = g.matrix();
  Eigen::RowVectorXd e0 = Eigen::RowVectorXd::Zero(g.size());
  e0(0) = 1.0;
  const double row_dev = (m.row(0) - e0).cwiseAbs().maxCoeff();
  const double col_dev = (m.col(0) - e0.transpose()).cwiseAbs().maxCoeff();
  return StructureReport{row_dev <= tol, col_dev <= tol, row_dev};
}

double max_imag(const CMat& m) { return m.imag().cwiseAbs().maxCoeff(); }

}  // namespace rlgst
