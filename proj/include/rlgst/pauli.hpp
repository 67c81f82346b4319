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
// Operator algebra in the normalized n-qubit Pauli basis.
//
// Basis elements are B_a = sigma_a / sqrt(d) with d = 2^n, indexed by a tuple
// of base-4 digits (one per qubit, qubit 1 most significant).  Linear maps on
// operators are stored as real d^2 x d^2 transfer matrices; unitary maps
// become orthogonal matrices and trace-preserving maps have first row
// (1, 0, ..., 0).

#ifndef RLGST_PAULI_HPP
#define RLGST_PAULI_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace rlgst {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;

// Base-4 multi-index into the n-qubit Pauli basis.  Digit values 0..3 mean
// I, X, Y, Z; the all-zero index is the (scaled) identity element.
struct PauliIndex {
  int n_qubits;
  int linear;  // sum of digits[k] * 4^(n-1-k), digit 0 most significant

  static PauliIndex from_digits(const std::vector<int>& digits);
  std::vector<int> digits() const;
};

// Number of basis elements, 4^n.
inline int pauli_count(int n_qubits) { return 1 << (2 * n_qubits); }

// Hilbert-space dimension, 2^n.
inline int hilbert_dim(int n_qubits) { return 1 << n_qubits; }

// The (unnormalized) Pauli operator sigma_a as a dense complex matrix.
CMat sigma_matrix(int n_qubits, int linear_index);

// Real d^2 x d^2 transfer matrix of a linear map on operators.
class Superop {
 public:
  Superop(int n_qubits, Mat matrix);

  static Superop identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return hilbert_dim(n_qubits_); }       // d
  int size() const { return pauli_count(n_qubits_); }      // d^2
  const Mat& matrix() const { return matrix_; }

 private:
  int n_qubits_;
  Mat matrix_;
};

// Pauli-coefficient column of a (vectorized) operator: coords[a] = tr(sigma_a O) / sqrt(d).
struct StateVec {
  int n_qubits;
  Vec coords;
};

// Pauli-coefficient row of a measurement effect; same coordinates as StateVec,
// so that probabilities are plain dot products.
struct EffectVec {
  int n_qubits;
  Vec coords;
};

// Structural report for a superoperator.
struct StructureReport {
  bool is_tp;
  bool is_unital;
  double max_row0_deviation;  // max |first row - (1,0,...,0)|
};

// Vectorize a hermitian operator.  Throws std::invalid_argument (reporting the
// max asymmetry magnitude) if the input deviates from hermiticity above tol.
StateVec vectorize(const CMat& op, double tol = 1e-12);

// Same coordinates, typed as a measurement effect.
EffectVec effect_from_operator(const CMat& op, double tol = 1e-12);

// EffectVec of the identity operator: (sqrt(d), 0, ..., 0).
EffectVec identity_effect(int n_qubits);

// Transfer matrix of the unitary conjugation map U (.) U^dagger.
// Throws std::invalid_argument if U is not unitary within tol.
Superop unitary_to_superop(const CMat& u, double tol = 1e-10);

// g2 after g1 (g1 acts first): matrix product g2 * g1.
Superop compose(const Superop& g2, const Superop& g1);

// Kronecker product; ga acts on the leading (most significant) qubits.
Superop tensor(const Superop& ga, const Superop& gb);

StateVec tensor(const StateVec& a, const StateVec& b);
EffectVec tensor(const EffectVec& a, const EffectVec& b);

StructureReport check_structure(const Superop& g, double tol = 1e-10);

// Max-norm of the imaginary part; used to validate that transfer-matrix
// entries of hermiticity-preserving maps are real.
double max_imag(const CMat& m);

}  // namespace rlgst

#endif
