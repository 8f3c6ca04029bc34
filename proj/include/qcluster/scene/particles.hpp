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

#ifndef QCLUSTER_SCENE_PARTICLES_HPP
#define QCLUSTER_SCENE_PARTICLES_HPP

#include <string>

#include "qcluster/errors.hpp"
#include "qcluster/random.hpp"
#include "qcluster/scene/grid.hpp"

namespace qcluster {

/// Rectangular-particle scenario parameters: particles are axis-aligned
/// d1 x d2 pixel rectangles, up to max_particles per scene.
struct ParticleParams {
  int d1 = 2;
  int d2 = 5;
  int max_particles = 10;

  void validate() const {
    if (d1 < 1 || d2 < 1) {
      throw ConfigError("particle dimensions must be >= 1");
    }
    if (max_particles < 0) {
      throw ConfigError("max_particles must be >= 0");
    }
  }
};

/// Number of particles on the surface (the scenario's ground truth A).
struct ParticleTruth {
  int count = 0;
};

/// Integer uniform draw on {0, ..., max_particles}.
inline ParticleTruth sample_particle_truth(Xoshiro256pp& rng,
                                           const ParticleParams& params) {
  params.validate();
  return ParticleTruth{static_cast<int>(
      rng.next_below(static_cast<std::uint64_t>(params.max_particles) + 1))};
}

/// Places truth.count non-overlapping rectangles of 1s. Each rectangle is
/// drawn by rejection: orientation uniform in {horizontal, vertical}, then
/// the top-left corner uniform over in-bounds positions; a draw overlapping
/// an already-placed rectangle is rejected and retried.
inline ChannelPattern place_particles(Xoshiro256pp& rng, const GridSpec& grid,
                                      const ParticleTruth& truth,
                                      const ParticleParams& params) {
  grid.validate();
  params.validate();
  if (truth.count < 0 || truth.count > params.max_particles) {
    throw ConfigError("particle count outside [0, max_particles]");
  }
  const int side = grid.side;
  ChannelPattern pattern(side);
  if (truth.count == 0) return pattern;
  const bool fits0 = params.d1 <= side && params.d2 <= side;
  if (!fits0) {
    throw PlacementError("particle does not fit on the grid in any "
                         "orientation");
  }
  for (int placed = 0; placed < truth.count; ++placed) {
    bool done = false;
    for (int attempt = 0; attempt < 100000; ++attempt) {
      const bool vertical = rng.next_below(2) == 1;
      const int h = vertical ? params.d2 : params.d1;
      const int w = vertical ? params.d1 : params.d2;
      const int r0 = static_cast<int>(
          rng.next_below(static_cast<std::uint64_t>(side - h + 1)));
      const int c0 = static_cast<int>(
          rng.next_below(static_cast<std::uint64_t>(side - w + 1)));
      bool overlap = false;
      for (int r = r0; r < r0 + h && !overlap; ++r) {
        for (int c = c0; c < c0 + w; ++c) {
          if (pattern.at(r, c)) {
            overlap = true;
            break;
          }
        }
      }
      if (overlap) continue;
      for (int r = r0; r < r0 + h; ++r) {
        for (int c = c0; c < c0 + w; ++c) pattern.at(r, c) = 1;
      }
      done = true;
      break;
    }
    if (!done) {
      throw PlacementError(
          "could not place particle " + std::to_string(placed + 1) + " of " +
          std::to_string(truth.count) + " within 10^5 attempts");
    }
  }
  return pattern;
}

}  // namespace qcluster

#endif
