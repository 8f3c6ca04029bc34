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

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "qcluster/probe/helstrom.hpp"
#include "qcluster/probe/three_qubit.hpp"

namespace {

using qcluster::LossChannelPair;
using qcluster::ThreeQubitState;

ThreeQubitState basis_state(int k) {
  ThreeQubitState s;
  s(k, k) = 1.0;
  return s;
}

TEST_CASE("weight endpoints give the trivial detectors", "[helstrom]") {
  const auto [rho1, rho2] =
      qcluster::build_output_states(LossChannelPair{}, 0.5);
  // b = 0: the difference operator is PSD, the detector never fires.
  const auto [a0, b0] = qcluster::helstrom_errors(rho1, rho2, 0.0);
  CHECK(a0 == Catch::Approx(1.0).margin(1e-12));
  CHECK(b0 == Catch::Approx(0.0).margin(1e-12));
  // b = 1: the detector covers the full support of rho1.
  const auto [a1, b1] = qcluster::helstrom_errors(rho1, rho2, 1.0);
  CHECK(a1 == Catch::Approx(0.0).margin(1e-10));
  CHECK(b1 >= 0.0);
  CHECK(b1 <= 1.0);
}

TEST_CASE("orthogonal states are perfectly distinguishable", "[helstrom]") {
  const ThreeQubitState rho1 = basis_state(0);
  const ThreeQubitState rho2 = basis_state(1);
  const auto [alpha, beta] = qcluster::helstrom_errors(rho1, rho2, 0.5);
  CHECK(alpha == Catch::Approx(0.0).margin(1e-12));
  CHECK(beta == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("commuting diagonal states match the classical likelihood test",
          "[helstrom]") {
  ThreeQubitState rho1;
  rho1(0, 0) = 0.6;
  rho1(1, 1) = 0.4;
  ThreeQubitState rho2;
  rho2(0, 0) = 0.2;
  rho2(1, 1) = 0.8;
  const auto [alpha, beta] = qcluster::helstrom_errors(rho1, rho2, 0.5);
  // The detector fires exactly on index 0, where rho1 dominates.
  CHECK(alpha == Catch::Approx(0.4).margin(1e-12));
  CHECK(beta == Catch::Approx(0.2).margin(1e-12));
}

TEST_CASE("identical states never separate", "[helstrom]") {
  const auto [rho1, rho2] =
      qcluster::build_output_states(LossChannelPair{}, 0.3);
  for (double b : {0.2, 0.5, 0.8}) {
    const auto [alpha, beta] = qcluster::helstrom_errors(rho1, rho1, b);
    // Whatever the detector, alpha + beta = 1 when both hypotheses produce
    // the same state.
    CHECK(alpha + beta == Catch::Approx(1.0).margin(1e-10));
  }
}

TEST_CASE("sweeping the weight trades the two errors monotonically",
          "[helstrom]") {
  const auto [rho1, rho2] =
      qcluster::build_output_states(LossChannelPair{}, 0.5);
  double prev_alpha = 2.0;
  double prev_beta = -1.0;
  for (int i = 0; i <= 200; ++i) {
    const double b = i / 200.0;
    const auto [alpha, beta] = qcluster::helstrom_errors(rho1, rho2, b);
    REQUIRE(alpha >= 0.0);
    REQUIRE(alpha <= 1.0);
    REQUIRE(beta >= 0.0);
    REQUIRE(beta <= 1.0);
    // alpha falls and beta rises as the detector grows with b; allow
    // round-off sized ties.
    REQUIRE(alpha <= prev_alpha + 1e-9);
    REQUIRE(beta >= prev_beta - 1e-9);
    prev_alpha = alpha;
    prev_beta = beta;
  }
}

TEST_CASE("weight outside the unit interval is rejected", "[helstrom]") {
  const ThreeQubitState rho = basis_state(0);
  CHECK_THROWS_AS(qcluster::helstrom_errors(rho, rho, -0.1),
                  qcluster::DomainError);
  CHECK_THROWS_AS(qcluster::helstrom_errors(rho, rho, 1.1),
                  qcluster::DomainError);
}

}  // namespace
