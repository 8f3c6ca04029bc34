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

#ifndef QCLUSTER_CLUSTER_DBSCAN_HPP
#define QCLUSTER_CLUSTER_DBSCAN_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "qcluster/cluster/points.hpp"
#include "qcluster/errors.hpp"

namespace qcluster {

/// Density-based clustering output. labels[i] is 0 for noise or the cluster
/// id (1..cluster_count) of input point i.
struct DbscanResult {
  static constexpr int kNoise = 0;
  std::vector<int> labels;
  int cluster_count = 0;
};

/// Standard density-reachability clustering. A point is core when its
/// eps-neighborhood (including itself) holds at least min_pts points;
/// clusters are the connected components of core points under eps-adjacency
/// plus their border points. A border point in reach of several clusters
/// joins the cluster of its first core neighbor in input (scan) order.
inline DbscanResult dbscan(const PointSet& ps, double eps, int min_pts) {
  if (!(eps > 0.0)) throw DomainError("eps must be > 0");
  if (min_pts < 1) throw DomainError("min_pts must be >= 1");
  const auto& pts = ps.points;
  const int n = static_cast<int>(pts.size());
  DbscanResult result;
  result.labels.assign(n, DbscanResult::kNoise);
  if (n == 0) return result;

  // Brute-force neighborhoods; point sets here are at most a few thousand
  // pixels. The squared threshold is padded by a relative epsilon so that
  // radii given as irrational values (sqrt(2)) keep their intended integer
  // reach under floating-point rounding.
  const double eps2 = eps * eps * (1.0 + 1e-12);
  std::vector<std::vector<int>> nbrs(n);
  std::vector<bool> core(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (static_cast<double>(squared_distance(pts[i], pts[j])) <= eps2) {
        nbrs[i].push_back(j);
      }
    }
    core[i] = static_cast<int>(nbrs[i].size()) >= min_pts;
  }

  // Phase 1: label core points via breadth-first search over core-core
  // adjacency, clusters numbered in order of their smallest core index.
  std::vector<int> queue;
  for (int i = 0; i < n; ++i) {
    if (!core[i] || result.labels[i] != DbscanResult::kNoise) continue;
    const int id = ++result.cluster_count;
    result.labels[i] = id;
    queue.assign(1, i);
    while (!queue.empty()) {
      const int p = queue.back();
      queue.pop_back();
      for (int q : nbrs[p]) {
        if (core[q] && result.labels[q] == DbscanResult::kNoise) {
          result.labels[q] = id;
          queue.push_back(q);
        }
      }
    }
  }

  // Phase 2: attach each border point to its first core neighbor in scan
  // order; points with no core neighbor stay noise.
  for (int i = 0; i < n; ++i) {
    if (core[i]) continue;
    for (int q : nbrs[i]) {
      if (core[q]) {
        result.labels[i] = result.labels[q];
        break;
      }
    }
  }
  return result;
}

/// Cluster count reported to the estimator, capped so the categorical
/// outcome space stays bounded.
inline int count_clusters(const DbscanResult& result, int cap) {
  if (cap < 0) throw DomainError("cap must be >= 0");
  return std::min(result.cluster_count, cap);
}

}  // namespace qcluster

#endif
