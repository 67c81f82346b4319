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

#include "rlgst/circuits.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rlgst/rng.hpp"

namespace rlgst {

namespace {

std::string sequence_id(const std::string& prefix, int k) {
  std::ostringstream os;
  os << prefix;
  os.width(4);
  os.fill('0');
  os << k;
  return os.str();
}

std::vector<std::string> draw_gates(const GateSet& gs, Rng& rng, int length) {
  std::vector<std::string> gates(length);
  for (int k = 0; k < length; ++k)
    gates[k] = gs.gate(static_cast<int>(rng.below(gs.size()))).label;
  return gates;
}

}  // namespace

const Vec& ProbabilityTable::probs_for(const std::string& circuit_id) const {
  const auto it = probs.find(circuit_id);
  if (it == probs.end())
    throw std::invalid_argument("ProbabilityTable: missing data for circuit '" + circuit_id + "'");
  return it->second;
}

void ProbabilityTable::validate() const {
  for (const auto& [id, p] : probs) {
    double sum = 0.0;
    for (int i = 0; i < p.size(); ++i) {
      if (p(i) < -1e-12)
        throw std::invalid_argument("ProbabilityTable: negative probability for '" + id + "'");
      sum += p(i);
    }
    if (std::abs(sum - 1.0) > 1e-10)
      throw std::invalid_argument("ProbabilityTable: probabilities for '" + id +
                                  "' do not sum to 1");
    if (shots > 0) {
      const auto it = counts.find(id);
      if (it == counts.end())
        throw std::invalid_argument("ProbabilityTable: missing counts for '" + id + "'");
      long long total = 0;
      for (long long c : it->second) total += c;
      if (total != shots)
        throw std::invalid_argument("ProbabilityTable: counts for '" + id +
                                    "' do not sum to the shot count");
    }
  }
}

std::vector<Circuit> random_circuits(const GateSet& gs, const std::vector<int>& lengths,
                                     int count_per_length, std::uint64_t rng_seed,
                                     bool include_null, const std::string& id_prefix) {
  if (count_per_length < 1)
    throw std::invalid_argument("random_circuits: count_per_length must be >= 1");
  Rng rng(derive_seed(rng_seed, "circuits"));

  std::vector<Circuit> out;
  std::set<std::vector<std::string>> seen;
  int serial = 0;
  for (int length : lengths) {
    if (length < 0) throw std::invalid_argument("random_circuits: negative length");
    for (int k = 0; k < count_per_length; ++k) {
      auto gates = draw_gates(gs, rng, length);
      if (!seen.insert(gates).second) continue;  // duplicate, discarded without replacement
      out.push_back({sequence_id(id_prefix, serial++), std::move(gates)});
    }
  }
  if (include_null && seen.insert(std::vector<std::string>{}).second)
    out.push_back({"null", {}});
  return out;
}

std::vector<Circuit> random_circuits_mixed(const GateSet& gs, const std::vector<int>& lengths,
                                           int total_count, std::uint64_t rng_seed,
                                           const std::string& id_prefix) {
  if (lengths.empty()) throw std::invalid_argument("random_circuits_mixed: empty length list");
  if (total_count < 1) throw std::invalid_argument("random_circuits_mixed: total_count must be >= 1");
  Rng rng(derive_seed(rng_seed, "circuits"));

  std::vector<Circuit> out;
  std::set<std::vector<std::string>> seen;
  int serial = 0;
  for (int k = 0; k < total_count; ++k) {
    const int length = lengths[rng.below(lengths.size())];
    auto gates = draw_gates(gs, rng, length);
    if (!seen.insert(gates).second) continue;
    out.push_back({sequence_id(id_prefix, serial++), std::move(gates)});
  }
  return out;
}

Vec simulate(const GateSet& gs, const Circuit& c, bool use_noisy) {
  if (use_noisy && !gs.has_noise())
    throw std::invalid_argument("simulate: noisy simulation requested but no noise attached");
  const SpamModel& spam = use_noisy ? gs.spam() : gs.spam_ideal();

  Vec state = spam.rho.coords;
  for (const auto& label : c.gates) {
    const int idx = gs.index_of(label);
    const Mat& g = use_noisy ? gs.noisy(idx).matrix() : gs.gate(idx).ideal.matrix();
    state = g * state;
  }
  Vec p(spam.n_outcomes());
  for (int mu = 0; mu < spam.n_outcomes(); ++mu)
    p(mu) = spam.effects[mu].coords.dot(state);
  return p;
}

std::vector<long long> sample_counts(const Vec& p, long long n_shots, std::uint64_t rng_seed) {
  if (n_shots < 0) throw std::invalid_argument("sample_counts: negative shot count");
  double sum = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) < -1e-12) throw std::invalid_argument("sample_counts: negative probability");
    sum += p(i);
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument("sample_counts: probabilities do not sum to 1");

  Rng rng(derive_seed(rng_seed, "shots"));
  std::vector<double> probs(p.data(), p.data() + p.size());
  return multinomial(rng, probs, n_shots);
}

std::vector<std::string> length_budget_check(const std::vector<Circuit>& circuits,
                                             double epsilon_estimate, double threshold) {
  if (!(epsilon_estimate > 0.0))
    throw std::invalid_argument("length_budget_check: epsilon_estimate must be positive");
  std::vector<std::string> warnings;
  for (const auto& c : circuits) {
    const double budget = c.length() * epsilon_estimate;
    if (budget > threshold) {
      std::ostringstream msg;
      msg << "circuit '" << c.id << "': L*eps = " << budget << " exceeds " << threshold
          << "; linear approximation may be poor";
      warnings.push_back(msg.str());
    }
  }
  return warnings;
}

std::string outcome_bitstring(int outcome, int n_qubits) {
  std::string s(n_qubits, '0');
  for (int k = 0; k < n_qubits; ++k)
    if (outcome & (1 << (n_qubits - 1 - k))) s[k] = '1';
  return s;
}

int outcome_index(const std::string& bitstring) {
  int v = 0;
  for (char c : bitstring) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("outcome_index: bad bitstring '" + bitstring + "'");
    v = (v << 1) | (c - '0');
  }
  return v;
}

}  // namespace rlgst
