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

#ifndef QCLUSTER_CLUSTER_POINTS_HPP
#define QCLUSTER_CLUSTER_POINTS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qcluster/scene/grid.hpp"

namespace qcluster {

/// Integer (row, col) coordinates of the pixels measured as 1. Built by a
/// row-major scan, so the list is duplicate-free and lexicographically
/// sorted; that scan order doubles as the deterministic tie-break order for
/// the clustering algorithms.
struct PointSet {
  std::vector<std::pair<int, int>> points;
};

inline PointSet points_from_pattern(const ChannelPattern& pattern) {
  PointSet ps;
  for (int r = 0; r < pattern.side; ++r) {
    for (int c = 0; c < pattern.side; ++c) {
      if (pattern.at(r, c)) ps.points.emplace_back(r, c);
    }
  }
  return ps;
}

/// Squared Euclidean distance between two pixel centers.
inline std::int64_t squared_distance(const std::pair<int, int>& a,
                                     const std::pair<int, int>& b) {
  const std::int64_t dr = a.first - b.first;
  const std::int64_t dc = a.second - b.second;
  return dr * dr + dc * dc;
}

}  // namespace qcluster

#endif
