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

#include <doctest.h>

#include "oracles.hpp"
#include "rlgst/pauli.hpp"

using namespace rlgst;

namespace {

CMat ket00_projector(int n) {
  const int d = hilbert_dim(n);
  CMat p = CMat::Zero(d, d);
  p(0, 0) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("PauliIndex round trip") {
  for (int n = 1; n <= 3; ++n)
    for (int lin = 0; lin < pauli_count(n); ++lin) {
      const PauliIndex idx{n, lin};
      CHECK(PauliIndex::from_digits(idx.digits()).linear == lin);
    }
  CHECK(PauliIndex::from_digits({1, 2}).linear == 1 * 4 + 2);
  CHECK_THROWS_AS(PauliIndex::from_digits({4}), std::invalid_argument);
}

TEST_CASE("vectorize of |0><0|") {
  const StateVec v = vectorize(ket00_projector(1));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(v.coords(0) == doctest::Approx(s).epsilon(1e-14));
  CHECK(v.coords(1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(v.coords(2) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(v.coords(3) == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("vectorize of the maximally mixed state") {
  const StateVec v = vectorize(0.5 * sigma_matrix(1, 0));
  CHECK(v.coords(0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(v.coords.tail(3).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("vectorize of the slightly rotated preparation state") {
  // rho = |0><0| + (a/sqrt(2)) (X + Y - Z) has expansion coefficients
  // (1/sqrt(2), a, a, 1/sqrt(2) - a); frozen for a = 0.01.
  const double a = 0.01;
  const CMat rho = ket00_projector(1) + (a / std::sqrt(2.0)) * (sigma_matrix(1, 1) +
                                                                sigma_matrix(1, 2) -
                                                                sigma_matrix(1, 3));
  const StateVec v = vectorize(rho);
  CHECK(v.coords(0) == doctest::Approx(0.7071067811865476).epsilon(1e-12));
  CHECK(v.coords(1) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(v.coords(2) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(v.coords(3) == doctest::Approx(0.6971067811865476).epsilon(1e-12));
}

TEST_CASE("vectorize rejects non-hermitian input") {
  CMat m = CMat::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_WITH_AS(vectorize(m), doctest::Contains("asymmetry"), std::invalid_argument);
}

TEST_CASE("transfer matrix of X") {
  const Superop g = unitary_to_superop(sigma_matrix(1, 1));
  Mat expected = Mat::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  CHECK((g.matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("transfer matrix of H swaps X and Z and flips Y") {
  CMat h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  const Superop g = unitary_to_superop(h);
  Mat expected = Mat::Zero(4, 4);
  expected(0, 0) = 1;
  expected(1, 3) = 1;
  expected(3, 1) = 1;
  expected(2, 2) = -1;
  CHECK((g.matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("transfer matrix of T rotates the X,Y block by pi/4") {
  CMat t = CMat::Zero(2, 2);
  t(0, 0) = 1.0;
  t(1, 1) = std::exp(std::complex<double>(0.0, M_PI / 4));
  const Superop g = unitary_to_superop(t);
  const double c = std::cos(M_PI / 4);
  Mat expected = Mat::Identity(4, 4);
  expected(1, 1) = c;
  expected(2, 2) = c;
  expected(2, 1) = c;   // sin(pi/4) == cos(pi/4)
  expected(1, 2) = -c;
  CHECK((g.matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("unitary_to_superop rejects non-unitary input") {
  CHECK_THROWS_AS(unitary_to_superop(2.0 * sigma_matrix(1, 0)), std::invalid_argument);
}

TEST_CASE("unitary superops are real orthogonal TP maps") {
  Rng rng(11);
  for (int n = 1; n <= 2; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const Superop g = unitary_to_superop(oracles::random_unitary(rng, hilbert_dim(n)));
      const Mat& m = g.matrix();
      CHECK((m.transpose() * m - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(check_structure(g).is_tp);
    }
}

TEST_CASE("composition matches unitary products") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const CMat u1 = oracles::random_unitary(rng, 2), u2 = oracles::random_unitary(rng, 2);
    const Superop lhs = compose(unitary_to_superop(u2), unitary_to_superop(u1));
    const Superop rhs = unitary_to_superop(u2 * u1);
    CHECK((lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("compose with identity and H twice") {
  CMat h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  const Superop gh = unitary_to_superop(h);
  CHECK((compose(Superop::identity(1), gh).matrix() - gh.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((compose(gh, gh).matrix() - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("tensor is consistent with tensor-product unitaries") {
  const Superop x = unitary_to_superop(sigma_matrix(1, 1));
  const Superop id = Superop::identity(1);
  const Superop xi = unitary_to_superop(sigma_matrix(2, 4));  // X on qubit 1
  CHECK((tensor(x, id).matrix() - xi.matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("tensor respects the mixed-product rule") {
  Rng rng(13);
  const Superop g2 = unitary_to_superop(oracles::random_unitary(rng, 2));
  const Superop g1 = unitary_to_superop(oracles::random_unitary(rng, 2));
  const Superop h2 = unitary_to_superop(oracles::random_unitary(rng, 2));
  const Superop h1 = unitary_to_superop(oracles::random_unitary(rng, 2));
  const Mat lhs = compose(tensor(g2, g1), tensor(h2, h1)).matrix();
  const Mat rhs = tensor(compose(g2, h2), compose(g1, h1)).matrix();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Hilbert-Schmidt inner products survive vectorization") {
  Rng rng(14);
  for (int n = 1; n <= 2; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const CMat a = oracles::random_hermitian(rng, hilbert_dim(n));
      const CMat b = oracles::random_hermitian(rng, hilbert_dim(n));
      const double direct = (a.adjoint() * b).trace().real();
      const double via_coords = vectorize(a).coords.dot(vectorize(b).coords);
      CHECK(via_coords == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("check_structure flags TP and non-TP maps") {
  CHECK(check_structure(Superop::identity(1)).is_tp);
  CHECK(check_structure(Superop::identity(1)).is_unital);

  Mat bad = Mat::Identity(4, 4);
  bad(0, 1) = 0.1;
  const StructureReport rep = check_structure(Superop(1, bad));
  CHECK_FALSE(rep.is_tp);
  CHECK(rep.max_row0_deviation == doctest::Approx(0.1));
}

TEST_CASE("identity effect has the documented coordinates") {
  const EffectVec e = identity_effect(1);
  CHECK(e.coords(0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(e.coords.tail(3).cwiseAbs().maxCoeff() == 0.0);
}
