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

#ifndef RLGST_RNG_HPP
#define RLGST_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace rlgst {

// Deterministic seed derivation: every consumer of randomness draws from its
// own stream, keyed by (master seed, purpose tag).  Adding a new stream never
// perturbs the draws of an existing one.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag);
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index);

// Thin wrapper around mt19937_64 with hand-rolled conversions, so that the
// produced sequences do not depend on the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n), unbiased via rejection.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 eng_;
};

// One multinomial draw of `shots` samples from `probs` (entries may carry
// tiny negative round-off; they are treated as zero).
std::vector<long long> multinomial(Rng& rng, const std::vector<double>& probs, long long shots);

}  // namespace rlgst

#endif
