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
// Noise-channel and SPAM-model constructors.  All constructors return
// trace-preserving transfer matrices built from closed-form expressions;
// the test suite checks them against an independent Kraus-conjugation oracle.

#ifndef RLGST_CHANNELS_HPP
#define RLGST_CHANNELS_HPP

#include <array>
#include <vector>

#include "rlgst/pauli.hpp"
#include "rlgst/rng.hpp"

namespace rlgst {

enum class Axis { X, Y, Z };

// Single-qubit composite noise map AD * Pauli * Rx * Ry * Rz (Rz acts first).
struct NoiseModel1Q {
  double e0 = 0.0;              // amplitude-damping probability, in [0, 1]
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;  // Pauli X/Y/Z probabilities, sum <= 1
  double e4 = 0.0, e5 = 0.0, e6 = 0.0;  // rotation angles about x, y, z (radians)
};

// Two-qubit composite noise map (AD x AD) * Pauli2 * (rot x rot).
// params[0..1]  per-qubit AD probabilities,
// params[2..16] fifteen Pauli2 weights q_ij, row-major over (i,j) != (0,0),
// params[17..22] rotation angles, qubit 1 then qubit 2, each (x, y, z).
struct NoiseModel2Q {
  std::array<double, 23> params{};
};

// Noisy preparation and measurement: one effect per outcome, outcomes indexed
// by bitstrings with qubit 1 leftmost.
struct SpamModel {
  StateVec rho;
  std::vector<EffectVec> effects;

  int n_outcomes() const { return static_cast<int>(effects.size()); }
  // Checks the effect-sum constraint and the unit-trace coordinate.
  void validate(double tol = 1e-10) const;
};

Superop amplitude_damping(double e0);
Superop pauli_channel(double e1, double e2, double e3);
Superop rotation(Axis axis, double theta);

// Two-qubit correlated Pauli channel, q given as in NoiseModel2Q.
Superop pauli2_channel(const std::array<double, 15>& q);

Superop noise_1q(const NoiseModel1Q& m);
Superop noise_2q(const NoiseModel2Q& m);

// The single-qubit SPAM model used throughout the simulated experiments:
// rho = |0><0| + (a/sqrt(2)) (X + Y - Z), P0 = rho as an effect, P1 = I - P0.
// a = 0 gives the ideal model.
SpamModel spam_tilted(double a);

// n-fold product of a two-outcome single-qubit model; 2^n outcomes indexed by
// bitstrings, bit k selecting the effect on qubit k (qubit 1 leftmost).
SpamModel spam_tensor(const SpamModel& single, int n);

// Ideal computational-basis SPAM: |0...0> preparation, projective Z readout.
SpamModel spam_computational(int n_qubits);

// Uniform random draw of noise parameters at scale s: probabilities in [0, s],
// angles in [-s, s].
NoiseModel1Q random_noise_1q(Rng& rng, double scale);
NoiseModel2Q random_noise_2q(Rng& rng, double scale);

// Multiply every parameter by a common factor; used to calibrate a random
// draw to a target gate-set infidelity.
NoiseModel1Q scale_noise(const NoiseModel1Q& m, double factor);
NoiseModel2Q scale_noise(const NoiseModel2Q& m, double factor);

}  // namespace rlgst

#endif
