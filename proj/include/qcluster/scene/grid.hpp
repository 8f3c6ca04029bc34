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

#ifndef QCLUSTER_SCENE_GRID_HPP
#define QCLUSTER_SCENE_GRID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcluster/errors.hpp"

namespace qcluster {

/// Square pixel grid, d pixels per side. Coordinates are (row, col) with the
/// origin at the top-left corner and pixel centers at integer positions.
struct GridSpec {
  int side = 1;

  void validate() const {
    if (side < 1) {
      throw ConfigError("grid side must be >= 1, got " + std::to_string(side));
    }
  }
};

/// Binary pixel matrix: the per-pixel channel identities (variable B) and,
/// after measurement noise, the measurement result (variable C).
struct ChannelPattern {
  int side = 0;
  std::vector<std::uint8_t> bits;  // row-major, values 0/1

  explicit ChannelPattern(int side_ = 0)
      : side(side_), bits(static_cast<std::size_t>(side_) * side_, 0) {}

  std::uint8_t& at(int r, int c) {
    return bits[static_cast<std::size_t>(r) * side + c];
  }
  std::uint8_t at(int r, int c) const {
    return bits[static_cast<std::size_t>(r) * side + c];
  }

  int count_ones() const {
    int n = 0;
    for (std::uint8_t b : bits) n += b;
    return n;
  }
};

/// Per-pixel probability matrix, same layout as ChannelPattern.
struct ProbabilityMap {
  int side = 0;
  std::vector<double> p;  // row-major

  explicit ProbabilityMap(int side_ = 0)
      : side(side_), p(static_cast<std::size_t>(side_) * side_, 0.0) {}

  double& at(int r, int c) {
    return p[static_cast<std::size_t>(r) * side + c];
  }
  double at(int r, int c) const {
    return p[static_cast<std::size_t>(r) * side + c];
  }
};

}  // namespace qcluster

#endif
