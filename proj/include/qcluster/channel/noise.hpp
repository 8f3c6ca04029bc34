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

#ifndef QCLUSTER_CHANNEL_NOISE_HPP
#define QCLUSTER_CHANNEL_NOISE_HPP

#include <string>

#include "qcluster/errors.hpp"
#include "qcluster/random.hpp"
#include "qcluster/scene/grid.hpp"

namespace qcluster {

/// Per-pixel binary measurement errors: a 0-pixel reads 1 with probability
/// xi1 (type 1), a 1-pixel reads 0 with probability xi2 (type 2).
struct ErrorPair {
  double xi1 = 0.0;
  double xi2 = 0.0;

  void validate() const {
    if (!(xi1 >= 0.0 && xi1 <= 1.0)) {
      throw ConfigError("xi1 must be in [0, 1], got " + std::to_string(xi1));
    }
    if (!(xi2 >= 0.0 && xi2 <= 1.0)) {
      throw ConfigError("xi2 must be in [0, 1], got " + std::to_string(xi2));
    }
  }
};

/// Independent per-pixel flips, row-major order. Exactly one uniform draw is
/// consumed per pixel and compared against the relevant threshold, so with a
/// common random stream the set of flipped pixels is nested in the error
/// probability - sweep comparisons then share their luck.
inline ChannelPattern apply_measurement_noise(Xoshiro256pp& rng,
                                              const ChannelPattern& pattern,
                                              const ErrorPair& errors) {
  errors.validate();
  ChannelPattern out(pattern.side);
  const std::size_t n = pattern.bits.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.next_double();
    const bool flip = u < (pattern.bits[i] ? errors.xi2 : errors.xi1);
    out.bits[i] = pattern.bits[i] ^ static_cast<std::uint8_t>(flip);
  }
  return out;
}

}  // namespace qcluster

#endif
