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
#include "rlgst/circuits.hpp"

using namespace rlgst;

TEST_CASE("random circuit generation at the paper's budget") {
  const GateSet gs = standard_gateset(StandardGateSet::PauliXYZ);
  const auto circuits = random_circuits(gs, {8, 16, 32, 64, 128}, 150, 7, true);
  CHECK(circuits.size() <= 751);
  CHECK(circuits.size() >= 740);  // duplicates are rare at these lengths
  CHECK(circuits.back().id == "null");
  CHECK(circuits.back().length() == 0);

  const auto again = random_circuits(gs, {8, 16, 32, 64, 128}, 150, 7, true);
  REQUIRE(again.size() == circuits.size());
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    CHECK(again[i].id == circuits[i].id);
    CHECK(again[i].gates == circuits[i].gates);
  }
}

TEST_CASE("length-zero generation yields exactly the null circuit") {
  const GateSet gs = standard_gateset(StandardGateSet::PauliXYZ);
  const auto circuits = random_circuits(gs, {0}, 1, 3, false);
  REQUIRE(circuits.size() == 1);
  CHECK(circuits[0].length() == 0);
}

TEST_CASE("simulate on ideal circuits") {
  const GateSet gs = standard_gateset(StandardGateSet::PauliXYZ);
  const Vec p_null = simulate(gs, {"n", {}}, false);
  CHECK(p_null(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p_null(1) == doctest::Approx(0.0).epsilon(1e-14));

  const Vec p_x = simulate(gs, {"x", {"X"}}, false);
  CHECK(p_x(0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(p_x(1) == doctest::Approx(1.0).epsilon(1e-14));

  const GateSet ixy = standard_gateset(StandardGateSet::IX90Y90);
  const Vec p_gx = simulate(ixy, {"g", {"gx"}}, false);
  CHECK(p_gx(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p_gx(1) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(simulate(gs, {"bad", {"Q"}}, false), std::invalid_argument);
}

TEST_CASE("ideal simulation matches the state-vector Born rule") {
  Rng rng(41);
  for (int n = 1; n <= 2; ++n) {
    // A throwaway gate set of random unitaries with ideal SPAM.
    std::vector<Gate> gates;
    std::vector<CMat> unitaries;
    for (int g = 0; g < 3; ++g) {
      unitaries.push_back(oracles::random_unitary(rng, hilbert_dim(n)));
      gates.push_back({std::string("U") + std::to_string(g), unitary_to_superop(unitaries[g])});
    }
    const GateSet gs(n, std::move(gates), spam_computational(n));

    for (int trial = 0; trial < 10; ++trial) {
      Circuit c{"c", {}};
      std::vector<CMat> applied;
      for (int k = 0; k < 6; ++k) {
        const int pick = static_cast<int>(rng.below(3));
        c.gates.push_back("U" + std::to_string(pick));
        applied.push_back(unitaries[pick]);
      }
      const Vec via_transfer = simulate(gs, c, false);
      const Vec via_statevec = oracles::born_probabilities(applied, n);
      CHECK((via_transfer - via_statevec).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("two-qubit outcomes line up with the gate placement") {
  const GateSet twoq = standard_gateset(StandardGateSet::TwoQubitIXYCnot);

  // A quarter turn on qubit 2 randomizes the rightmost outcome bit.
  const Vec p = simulate(twoq, {"a", {"g0x"}}, false);
  CHECK(p(outcome_index("00")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p(outcome_index("01")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(p(outcome_index("10"))) < 1e-12);
  CHECK(std::abs(p(outcome_index("11"))) < 1e-12);

  // And on qubit 1, the leftmost bit.
  const Vec q = simulate(twoq, {"b", {"gx0"}}, false);
  CHECK(q(outcome_index("00")) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(q(outcome_index("10")) == doctest::Approx(0.5).epsilon(1e-12));

  // CNOT fires only when the control (qubit 1) is set.
  const Vec r = simulate(twoq, {"c", {"CNOT"}}, false);
  CHECK(r(outcome_index("00")) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("simulation is invariant under identity insertions") {
  const GateSet gs = standard_gateset(StandardGateSet::IX90Y90);
  const Circuit plain{"a", {"gx", "gy", "gx"}};
  const Circuit padded{"b", {"I", "gx", "I", "gy", "gx", "I"}};
  CHECK((simulate(gs, plain, false) - simulate(gs, padded, false)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("sample_counts basics") {
  Vec sure(2);
  sure << 1.0, 0.0;
  const auto counts = sample_counts(sure, 1000, 5);
  CHECK(counts[0] == 1000);
  CHECK(counts[1] == 0);

  Vec fair(2);
  fair << 0.5, 0.5;
  const auto c1 = sample_counts(fair, 8192, 6);
  const auto c2 = sample_counts(fair, 8192, 6);
  CHECK(c1 == c2);
  CHECK(c1[0] + c1[1] == 8192);
  // 5-sigma binomial window around the mean.
  CHECK(std::abs(c1[0] - 4096.0) < 5.0 * std::sqrt(2048.0));

  Vec bad(2);
  bad << 0.7, 0.7;
  CHECK_THROWS_AS(sample_counts(bad, 10, 1), std::invalid_argument);
}

TEST_CASE("sampled frequencies converge to the distribution") {
  Vec p(4);
  p << 0.45, 0.3, 0.2, 0.05;
  const long long shots = 4096;
  const double bound = 5.0 * std::sqrt(4.0 / static_cast<double>(shots));
  int within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto counts = sample_counts(p, shots, seed);
    double l1 = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      l1 += std::abs(static_cast<double>(counts[mu]) / shots - p(mu));
    if (l1 <= bound) ++within;
  }
  CHECK(within >= 99);
}

TEST_CASE("length budget warnings") {
  std::vector<Circuit> circuits{{"short", std::vector<std::string>(128, "X")},
                                {"long", std::vector<std::string>(1000, "X")},
                                {"null", {}}};
  // L * eps = 0.0128 and 0.1: neither crosses the 0.1 threshold.
  const auto warn_small = length_budget_check(circuits, 1e-4);
  CHECK(warn_small.empty());

  // At eps = 1e-3 both finite circuits cross; the null circuit never warns.
  const auto warn_big = length_budget_check(circuits, 1e-3);
  REQUIRE(warn_big.size() == 2);
  CHECK(warn_big[1].find("long") != std::string::npos);

  const auto warn_only_long = length_budget_check(circuits, 5e-4);
  REQUIRE(warn_only_long.size() == 1);
  CHECK(warn_only_long[0].find("long") != std::string::npos);

  CHECK_THROWS_AS(length_budget_check(circuits, 0.0), std::invalid_argument);
}

TEST_CASE("outcome bitstrings use qubit 1 as the leftmost bit") {
  CHECK(outcome_bitstring(2, 2) == "10");
  CHECK(outcome_index("10") == 2);
  CHECK(outcome_bitstring(1, 2) == "01");
  CHECK_THROWS_AS(outcome_index("2x"), std::invalid_argument);
}
