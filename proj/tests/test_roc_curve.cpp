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
#include <cmath>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qcluster/probe/roc.hpp"
#include "qcluster/random.hpp"

namespace {

using qcluster::LossChannelPair;
using qcluster::RocCurve;
using qcluster::RocPoint;

constexpr double kF = 0.6259600062986267;

TEST_CASE("lookup interpolates linearly", "[roc_curve]") {
  RocCurve curve;
  curve.points = {{0.0, 0.4}, {0.1, 0.2}};
  curve.validate();
  CHECK(qcluster::roc_lookup(curve, 0.0) == Catch::Approx(0.4));
  CHECK(qcluster::roc_lookup(curve, 0.05) ==
        Catch::Approx(0.3).margin(1e-14));
  CHECK(qcluster::roc_lookup(curve, 0.1) == Catch::Approx(0.2));
  CHECK_THROWS_AS(qcluster::roc_lookup(curve, 0.11), qcluster::DomainError);
  CHECK_THROWS_AS(qcluster::roc_lookup(curve, -0.01), qcluster::DomainError);
}

TEST_CASE("curve validation rejects malformed curves", "[roc_curve]") {
  RocCurve bad;
  CHECK_THROWS_AS(bad.validate(), qcluster::NumericError);
  bad.points = {{0.0, 0.4}, {0.0, 0.3}};
  CHECK_THROWS_AS(bad.validate(), qcluster::NumericError);
  bad.points = {{0.0, 0.4}, {0.1, 0.5}};
  CHECK_THROWS_AS(bad.validate(), qcluster::NumericError);
  bad.points = {{0.0, 1.4}};
  CHECK_THROWS_AS(bad.validate(), qcluster::NumericError);
}

TEST_CASE("lower hull drops points above a chord and keeps those below",
          "[roc_curve]") {
  std::vector<RocPoint> above = {{0.0, 1.0}, {0.5, 0.9}, {1.0, 0.0}};
  auto hull = qcluster::detail::lower_convex_hull(above);
  REQUIRE(hull.size() == 2);
  CHECK(hull[0].alpha == 0.0);
  CHECK(hull[1].alpha == 1.0);

  std::vector<RocPoint> below = {{0.0, 1.0}, {0.5, 0.2}, {1.0, 0.0}};
  hull = qcluster::detail::lower_convex_hull(below);
  REQUIRE(hull.size() == 3);
  CHECK(hull[1].beta == Catch::Approx(0.2));
}

TEST_CASE("lower hull is independent of input order", "[roc_curve]") {
  qcluster::Xoshiro256pp rng(5);
  std::vector<RocPoint> cloud;
  for (int i = 0; i < 200; ++i) {
    cloud.push_back({rng.next_double(), rng.next_double()});
  }
  const auto reference = qcluster::detail::lower_convex_hull(cloud);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(cloud.begin(), cloud.end(), rng);
    const auto hull = qcluster::detail::lower_convex_hull(cloud);
    REQUIRE(hull.size() == reference.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
      CHECK(hull[i].alpha == reference[i].alpha);
      CHECK(hull[i].beta == reference[i].beta);
    }
  }
}

TEST_CASE("endpoint-dense grid covers both ends of the unit interval",
          "[roc_curve]") {
  const auto g = qcluster::detail::endpoint_dense_grid(16);
  REQUIRE(g.size() == 16);
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[1] <= 1e-7);          // ladder reaches ~1e-8 above 0
  CHECK(g[g.size() - 2] >= 1.0 - 1e-7);  // and the mirror below 1
}

TEST_CASE("classical curve nodes agree with the closed form", "[roc_curve]") {
  const RocCurve curve = qcluster::classical_roc_curve(LossChannelPair{});
  REQUIRE(curve.points.size() == 101);
  for (const RocPoint& p : curve.points) {
    const double closed =
        std::pow(kF * std::sqrt(1.0 - p.alpha) -
                     std::sqrt(p.alpha * (1.0 - kF * kF)),
                 2);
    REQUIRE(p.beta == Catch::Approx(closed).margin(1e-7));
  }
  // Interpolated lookups off the nodes stay close on the smooth interior.
  for (double alpha : {0.0123, 0.0217, 0.0349, 0.0481}) {
    const double closed =
        std::pow(kF * std::sqrt(1.0 - alpha) -
                     std::sqrt(alpha * (1.0 - kF * kF)),
                 2);
    CHECK(qcluster::roc_lookup(curve, alpha) ==
          Catch::Approx(closed).margin(1e-5));
  }
}

TEST_CASE("coarse quantum curve has the expected shape", "[roc_curve]") {
  const RocCurve q = qcluster::quantum_roc(LossChannelPair{}, 48, 48, 0.05);
  q.validate();
  CHECK(q.points.front().alpha == 0.0);
  CHECK(q.points.back().alpha == Catch::Approx(0.05).margin(1e-12));
  // Even a coarse grid lands near the dressed-state floor at alpha = 0.
  CHECK(q.points.front().beta > 0.12);
  CHECK(q.points.front().beta < 0.17);

  const RocCurve c = qcluster::classical_roc_curve(LossChannelPair{});
  for (int i = 0; i <= 5; ++i) {
    const double alpha = 0.01 * i;
    CHECK(qcluster::roc_lookup(q, alpha) <
          qcluster::roc_lookup(c, alpha));
  }
}

TEST_CASE("quantum curve rejects degenerate grids", "[roc_curve]") {
  CHECK_THROWS_AS(qcluster::quantum_roc(LossChannelPair{}, 1, 16, 0.05),
                  qcluster::DomainError);
  CHECK_THROWS_AS(qcluster::quantum_roc(LossChannelPair{}, 16, 1, 0.05),
                  qcluster::DomainError);
  CHECK_THROWS_AS(qcluster::quantum_roc(LossChannelPair{}, 16, 16, 0.0),
                  qcluster::DomainError);
}

}  // namespace
