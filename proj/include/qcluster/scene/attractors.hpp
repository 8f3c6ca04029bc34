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

#ifndef QCLUSTER_SCENE_ATTRACTORS_HPP
#define QCLUSTER_SCENE_ATTRACTORS_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/errors.hpp"
#include "qcluster/random.hpp"
#include "qcluster/scene/grid.hpp"

namespace qcluster {

/// Parameters of the two-attractor surface: each attractor contributes a
/// Gaussian bump of amplitude phi and variance sigma2 (in pixels^2) to the
/// per-pixel particle probability. Sampled attractor pairs keep at least
/// min_separation between each other and edge_margin to every grid edge.
struct AttractorParams {
  double phi = 1.0;
  double sigma2 = 2.0;
  double min_separation = 8.0;
  double edge_margin = 4.0;

  void validate() const {
    if (!(phi > 0.0)) throw ConfigError("phi must be > 0");
    if (!(sigma2 > 0.0)) throw ConfigError("sigma2 must be > 0");
    if (!(min_separation > 0.0)) {
      throw ConfigError("min_separation must be > 0");
    }
    if (!(edge_margin >= 0.0)) throw ConfigError("edge_margin must be >= 0");
  }
};

/// Unordered pair of attractor pixel coordinates, stored in lexicographic
/// (row, col) order so equal truths compare equal.
struct AttractorTruth {
  int r1 = 0, c1 = 0;
  int r2 = 0, c2 = 0;

  void canonicalize() {
    if (r2 < r1 || (r2 == r1 && c2 < c1)) {
      std::swap(r1, r2);
      std::swap(c1, c2);
    }
  }
};

/// Draws an attractor pair uniformly over all integer coordinate pairs that
/// respect the edge margin and minimum separation, by rejection sampling.
inline AttractorTruth sample_attractor_truth(Xoshiro256pp& rng,
                                             const GridSpec& grid,
                                             const AttractorParams& params) {
  grid.validate();
  params.validate();
  const int lo = static_cast<int>(std::ceil(params.edge_margin));
  const int hi = grid.side - 1 - lo;
  if (hi < lo) {
    throw ConfigError("edge margin leaves no valid attractor positions");
  }
  // Largest achievable separation inside the margin box; if even that is
  // below the minimum, rejection could never succeed.
  const double span = hi - lo;
  if (span * span * 2.0 < params.min_separation * params.min_separation) {
    throw ConfigError("margin box too small for the requested separation");
  }
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo + 1);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    AttractorTruth t;
    t.r1 = lo + static_cast<int>(rng.next_below(range));
    t.c1 = lo + static_cast<int>(rng.next_below(range));
    t.r2 = lo + static_cast<int>(rng.next_below(range));
    t.c2 = lo + static_cast<int>(rng.next_below(range));
    const double dr = t.r1 - t.r2;
    const double dc = t.c1 - t.c2;
    if (dr * dr + dc * dc >=
        params.min_separation * params.min_separation) {
      t.canonicalize();
      return t;
    }
  }
  throw ConfigError("attractor rejection sampling exceeded 10^6 tries");
}

/// Per-pixel particle probability min(1, f) with
///   f(r, c) = phi * sum_i exp(-((r - r_i)^2 + (c - c_i)^2) / (2 sigma2)),
/// evaluated at pixel centers. The Gaussian factors are separable, so each
/// attractor needs only one row table and one column table of exponentials.
inline ProbabilityMap attractor_occupancy(const AttractorTruth& truth,
                                          const GridSpec& grid,
                                          const AttractorParams& params) {
  grid.validate();
  params.validate();
  const int d = grid.side;
  const double inv = 1.0 / (2.0 * params.sigma2);
  std::vector<double> row1(d), col1(d), row2(d), col2(d);
  for (int i = 0; i < d; ++i) {
    row1[i] = std::exp(-(i - truth.r1) * (i - truth.r1) * inv);
    col1[i] = std::exp(-(i - truth.c1) * (i - truth.c1) * inv);
    row2[i] = std::exp(-(i - truth.r2) * (i - truth.r2) * inv);
    col2[i] = std::exp(-(i - truth.c2) * (i - truth.c2) * inv);
  }
  ProbabilityMap map(d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const double f = params.phi * (row1[r] * col1[c] + row2[r] * col2[c]);
      map.at(r, c) = std::fmin(1.0, f);
    }
  }
  return map;
}

/// Independent Bernoulli draw per pixel, in row-major order.
inline ChannelPattern sample_pattern_from_probs(Xoshiro256pp& rng,
                                                const ProbabilityMap& probs) {
  ChannelPattern pattern(probs.side);
  const std::size_t n = probs.p.size();
  for (std::size_t i = 0; i < n; ++i) {
    pattern.bits[i] = rng.next_double() < probs.p[i] ? 1 : 0;
  }
  return pattern;
}

}  // namespace qcluster

#endif
