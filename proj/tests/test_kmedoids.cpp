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

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qcluster/cluster/kmedoids.hpp"
#include "qcluster/random.hpp"

namespace {

using qcluster::KMedoidsResult;
using qcluster::PointSet;

PointSet make_points(std::vector<std::pair<int, int>> pts) {
  PointSet ps;
  ps.points = std::move(pts);
  return ps;
}

// Exhaustive k = 2 oracle: minimum assignment cost over all medoid pairs.
std::int64_t brute_force_cost2(const PointSet& ps) {
  const auto& pts = ps.points;
  std::int64_t best = -1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::int64_t cost = 0;
      for (const auto& p : pts) {
        cost += std::min(qcluster::squared_distance(p, pts[i]),
                         qcluster::squared_distance(p, pts[j]));
      }
      if (best < 0 || cost < best) best = cost;
    }
  }
  return best;
}

std::int64_t result_cost(const PointSet& ps, const KMedoidsResult& result) {
  std::int64_t cost = 0;
  for (const auto& p : ps.points) {
    std::int64_t nearest = -1;
    for (const auto& m : result.medoids) {
      const std::int64_t d2 = qcluster::squared_distance(p, m);
      if (nearest < 0 || d2 < nearest) nearest = d2;
    }
    cost += nearest;
  }
  return cost;
}

TEST_CASE("two well-separated blocks yield their centers", "[kmedoids]") {
  std::vector<std::pair<int, int>> pts;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      pts.emplace_back(5 + dr, 5 + dc);
      pts.emplace_back(15 + dr, 15 + dc);
    }
  }
  const KMedoidsResult result = qcluster::kmedoids(make_points(pts), 2);
  REQUIRE(!result.degenerate);
  REQUIRE(result.medoids.size() == 2);
  CHECK(result.medoids[0] == std::pair<int, int>(5, 5));
  CHECK(result.medoids[1] == std::pair<int, int>(15, 15));
}

TEST_CASE("one medoid of a symmetric cross is its center", "[kmedoids]") {
  const PointSet ps = make_points(
      {{5, 5}, {4, 5}, {6, 5}, {5, 4}, {5, 6}});
  const KMedoidsResult result = qcluster::kmedoids(ps, 1);
  REQUIRE(result.medoids.size() == 1);
  CHECK(result.medoids[0] == std::pair<int, int>(5, 5));
}

TEST_CASE("fewer points than medoids is flagged degenerate", "[kmedoids]") {
  const KMedoidsResult result =
      qcluster::kmedoids(make_points({{3, 7}}), 2);
  CHECK(result.degenerate);
  REQUIRE(result.medoids.size() == 1);
  CHECK(result.medoids[0] == std::pair<int, int>(3, 7));
  const KMedoidsResult empty = qcluster::kmedoids(PointSet{}, 2);
  CHECK(empty.degenerate);
  CHECK(empty.medoids.empty());
}

TEST_CASE("as many medoids as points costs zero", "[kmedoids]") {
  const PointSet ps = make_points({{1, 1}, {4, 0}, {9, 9}});
  const KMedoidsResult result = qcluster::kmedoids(ps, 3);
  CHECK(!result.degenerate);
  REQUIRE(result.medoids.size() == 3);
  CHECK(result_cost(ps, result) == 0);
}

TEST_CASE("non-positive k is rejected", "[kmedoids]") {
  CHECK_THROWS_AS(qcluster::kmedoids(PointSet{}, 0), qcluster::DomainError);
  CHECK_THROWS_AS(qcluster::kmedoids(PointSet{}, -1), qcluster::DomainError);
}

TEST_CASE("medoids come out sorted and unique", "[kmedoids]") {
  qcluster::Xoshiro256pp rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<std::pair<int, int>> uniq;
    while (uniq.size() < 10) {
      uniq.emplace(static_cast<int>(rng.next_below(12)),
                   static_cast<int>(rng.next_below(12)));
    }
    const PointSet ps = make_points({uniq.begin(), uniq.end()});
    const KMedoidsResult result = qcluster::kmedoids(ps, 3);
    REQUIRE(result.medoids.size() == 3);
    REQUIRE(std::is_sorted(result.medoids.begin(), result.medoids.end()));
    REQUIRE(std::adjacent_find(result.medoids.begin(),
                               result.medoids.end()) ==
            result.medoids.end());
  }
}

TEST_CASE("swap search reaches the brute-force optimum on small instances",
          "[kmedoids]") {
  qcluster::Xoshiro256pp rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(17));  // 2..18 points
    std::set<std::pair<int, int>> uniq;
    while (static_cast<int>(uniq.size()) < n) {
      uniq.emplace(static_cast<int>(rng.next_below(8)),
                   static_cast<int>(rng.next_below(8)));
    }
    const PointSet ps = make_points({uniq.begin(), uniq.end()});
    const KMedoidsResult result = qcluster::kmedoids(ps, 2);
    REQUIRE(result.medoids.size() == 2);
    REQUIRE(result_cost(ps, result) == brute_force_cost2(ps));
  }
}

}  // namespace
