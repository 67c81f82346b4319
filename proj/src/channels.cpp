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

#include "rlgst/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rlgst {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << what << " out of range [0,1]: " << p;
    throw std::invalid_argument(msg.str());
  }
}

// +1 if sigma_i and sigma_a commute, -1 otherwise (single-qubit digits).
double conj_sign(int i, int a) { return (i == 0 || a == 0 || i == a) ? 1.0 : -1.0; }

}  // namespace

void SpamModel::validate(double tol) const {
  const EffectVec id = identity_effect(rho.n_qubits);
  Vec sum = Vec::Zero(id.coords.size());
  for (const auto& e : effects) {
    if (e.n_qubits != rho.n_qubits)
      throw std::invalid_argument("SpamModel: effect qubit count mismatch");
    sum += e.coords;
  }
  const double dev = (sum - id.coords).cwiseAbs().maxCoeff();
  if (dev > tol) {
    std::ostringstream msg;
    msg << "SpamModel: effects do not sum to identity, max deviation " << dev;
    throw std::invalid_argument(msg.str());
  }
  const double trace_coord = rho.coords(0) * std::sqrt(static_cast<double>(hilbert_dim(rho.n_qubits)));
  if (std::abs(trace_coord - 1.0) > tol)
    throw std::invalid_argument("SpamModel: preparation does not have unit trace");
}

Superop amplitude_damping(double e0) {
  require_probability(e0, "amplitude_damping: e0");
  const double s = std::sqrt(1.0 - e0);
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = s;
  m(2, 2) = s;
  m(3, 0) = e0;
  m(3, 3) = 1.0 - e0;
  return Superop(1, std::move(m));
}

Superop pauli_channel(double e1, double e2, double e3) {
  require_probability(e1, "pauli_channel: e1");
  require_probability(e2, "pauli_channel: e2");
  require_probability(e3, "pauli_channel: e3");
  if (e1 + e2 + e3 > 1.0 + 1e-15)
    throw std::invalid_argument("pauli_channel: probabilities sum above 1");
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0 - 2.0 * (e2 + e3);
  m(2, 2) = 1.0 - 2.0 * (e1 + e3);
  m(3, 3) = 1.0 - 2.0 * (e1 + e2);
  return Superop(1, std::move(m));
}

Superop rotation(Axis axis, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("rotation: angle must be finite");
  const int digit = axis == Axis::X ? 1 : axis == Axis::Y ? 2 : 3;
  const std::complex<double> i(0.0, 1.0);
  const CMat u = std::cos(theta / 2) * sigma_matrix(1, 0) -
                 i * std::sin(theta / 2) * sigma_matrix(1, digit);
  return unitary_to_superop(u);
}

Superop pauli2_channel(const std::array<double, 15>& q) {
  double total = 0.0;
  for (double w : q) {
    if (!(w >= 0.0)) throw std::invalid_argument("pauli2_channel: negative weight");
    total += w;
  }
  if (total > 1.0 + 1e-15)
    throw std::invalid_argument("pauli2_channel: weights sum above 1");

  // Full 16-entry weight table, q00 fixed by normalization.
  std::array<double, 16> w{};
  w[0] = 1.0 - total;
  for (int k = 0; k < 15; ++k) w[k + 1] = q[k];

  Mat m = Mat::Zero(16, 16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double entry = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          entry += w[4 * i + j] * conj_sign(i, a) * conj_sign(j, b);
      m(4 * a + b, 4 * a + b) = entry;
    }
  return Superop(2, std::move(m));
}

Superop noise_1q(const NoiseModel1Q& m) {
  const Superop rot = compose(rotation(Axis::X, m.e4),
                              compose(rotation(Axis::Y, m.e5), rotation(Axis::Z, m.e6)));
  return compose(amplitude_damping(m.e0),
                 compose(pauli_channel(m.e1, m.e2, m.e3), rot));
}

Superop noise_2q(const NoiseModel2Q& m) {
  const auto& p = m.params;
  std::array<double, 15> q{};
  for (int k = 0; k < 15; ++k) q[k] = p[2 + k];

  const Superop rot1 = compose(rotation(Axis::X, p[17]),
                               compose(rotation(Axis::Y, p[18]), rotation(Axis::Z, p[19])));
  const Superop rot2 = compose(rotation(Axis::X, p[20]),
                               compose(rotation(Axis::Y, p[21]), rotation(Axis::Z, p[22])));
  const Superop ad = tensor(amplitude_damping(p[0]), amplitude_damping(p[1]));
  return compose(ad, compose(pauli2_channel(q), tensor(rot1, rot2)));
}

SpamModel spam_tilted(double a) {
  const double rt2 = std::sqrt(2.0);
  // Bloch vector (sqrt(2) a, sqrt(2) a, 1 - sqrt(2) a); must stay inside the sphere.
  const double bx = rt2 * a, bz = 1.0 - rt2 * a;
  if (2.0 * bx * bx + bz * bz > 1.0 + 1e-12)
    throw std::invalid_argument("spam_tilted: a yields a nonphysical state");

  Vec rho(4);
  rho << 1.0 / rt2, a, a, 1.0 / rt2 - a;

  const EffectVec id = identity_effect(1);
  EffectVec p0{1, rho};
  EffectVec p1{1, id.coords - rho};
  SpamModel spam{StateVec{1, rho}, {p0, p1}};
  spam.validate();
  return spam;
}

SpamModel spam_tensor(const SpamModel& single, int n) {
  if (n < 1) throw std::invalid_argument("spam_tensor: n must be >= 1");
  if (single.n_outcomes() != 2)
    throw std::invalid_argument("spam_tensor: single-qubit model must have two outcomes");
  if (n == 1) return single;

  StateVec rho = single.rho;
  for (int k = 1; k < n; ++k) rho = tensor(rho, single.rho);

  std::vector<EffectVec> effects;
  const int m = 1 << n;
  effects.reserve(m);
  for (int outcome = 0; outcome < m; ++outcome) {
    EffectVec e = single.effects[(outcome >> (n - 1)) & 1];
    for (int k = 1; k < n; ++k)
      e = tensor(e, single.effects[(outcome >> (n - 1 - k)) & 1]);
    effects.push_back(std::move(e));
  }
  SpamModel spam{std::move(rho), std::move(effects)};
  spam.validate();
  return spam;
}

SpamModel spam_computational(int n_qubits) { return spam_tensor(spam_tilted(0.0), n_qubits); }

NoiseModel1Q random_noise_1q(Rng& rng, double scale) {
  NoiseModel1Q m;
  m.e0 = rng.uniform(0.0, scale);
  m.e1 = rng.uniform(0.0, scale);
  m.e2 = rng.uniform(0.0, scale);
  m.e3 = rng.uniform(0.0, scale);
  m.e4 = rng.uniform(-scale, scale);
  m.e5 = rng.uniform(-scale, scale);
  m.e6 = rng.uniform(-scale, scale);
  return m;
}

NoiseModel2Q random_noise_2q(Rng& rng, double scale) {
  NoiseModel2Q m;
  for (int k = 0; k <= 16; ++k) m.params[k] = rng.uniform(0.0, scale);
  for (int k = 17; k <= 22; ++k) m.params[k] = rng.uniform(-scale, scale);
  return m;
}

NoiseModel1Q scale_noise(const NoiseModel1Q& m, double factor) {
  return NoiseModel1Q{m.e0 * factor, m.e1 * factor, m.e2 * factor, m.e3 * factor,
                      m.e4 * factor, m.e5 * factor, m.e6 * factor};
}

NoiseModel2Q scale_noise(const NoiseModel2Q& m, double factor) {
  NoiseModel2Q out;
  for (std::size_t k = 0; k < m.params.size(); ++k) out.params[k] = m.params[k] * factor;
  return out;
}

}  // namespace rlgst
