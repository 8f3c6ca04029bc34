// Copyright 2026 The qcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCLUSTER_RANDOM_HPP
#define QCLUSTER_RANDOM_HPP

#include <array>
#include <cstdint>

namespace qcluster {

/// Finalizing 64-bit mixer (the splitmix64 output function). Bijective, so
/// distinct inputs give distinct outputs; used both to expand seeds and to
/// derive independent substreams from (master, index, tag) triples.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256++ generator. Small, fast, and fully reproducible across
/// platforms; all simulation randomness flows through this type.
class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  /// Seeds the four state words by repeated mixing of a single 64-bit seed.
  explicit constexpr Xoshiro256pp(std::uint64_t seed = 0) {
    std::uint64_t z = seed;
    for (auto& w : state_) {
      z = mix64(z);
      w = z;
      // Decorrelate consecutive words: feed the mixed output back in.
      z += 0x9e3779b97f4a7c15ULL;
    }
    // The all-zero state is invalid for xoshiro; mix64 of any input chain
    // producing four zero words is astronomically unlikely, but guard anyway.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
      state_[0] = 0x9e3779b97f4a7c15ULL;
    }
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  constexpr std::uint64_t operator()() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) using the top 53 bits.
  constexpr double next_double() {
    return static_cast<double>(operator()() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) via bitmask rejection. Unbiased and uses
  /// a platform-independent number of draws for a given stream content.
  constexpr std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0};
    mask >>= 63 - bit_width_minus_one(bound - 1);
    for (;;) {
      const std::uint64_t v = operator()() & mask;
      if (v < bound) return v;
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  static constexpr int bit_width_minus_one(std::uint64_t v) {
    int w = 0;
    while (v >>= 1) ++w;
    return w;
  }

  std::array<std::uint64_t, 4> state_{};
};

/// Derives a generator for logical substream `index` with a small role `tag`.
/// Streams for distinct (master, index, tag) triples are decorrelated; the
/// derivation depends only on the triple, never on draw order elsewhere, which
/// is what makes multi-threaded runs bit-identical to single-threaded ones.
inline constexpr Xoshiro256pp seed_stream(std::uint64_t master,
                                          std::uint64_t index,
                                          std::uint64_t tag) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ (index + 0x6a09e667f3bcc909ULL));
  h = mix64(h ^ (tag + 0xbb67ae8584caa73bULL));
  return Xoshiro256pp(h);
}

}  // namespace qcluster

#endif
