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

#ifndef QCLUSTER_PROBE_HELSTROM_HPP
#define QCLUSTER_PROBE_HELSTROM_HPP

#include <cmath>
#include <string>
#include <utility>

#include "qcluster/errors.hpp"
#include "qcluster/probe/jacobi.hpp"
#include "qcluster/probe/three_qubit.hpp"

namespace qcluster {

/// Error pair of the optimal two-outcome measurement that weights the
/// hypotheses by b: the detector projects onto the negative eigenspace Pi of
/// (1-b) rho2 - b rho1 and reports "channel 1" there, giving
///   alpha = Tr[(1 - Pi) rho1],  beta = Tr[Pi rho2].
/// Eigenvalues below -1e-12 count as negative; the slack keeps round-off at
/// degenerate zeros from flipping projector membership.
inline std::pair<double, double> helstrom_errors(const ThreeQubitState& rho1,
                                                 const ThreeQubitState& rho2,
                                                 double b) {
  if (!(b >= 0.0 && b <= 1.0)) {
    throw DomainError("weight b must be in [0, 1], got " + std::to_string(b));
  }
  std::array<std::array<double, 8>, 8> diff;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      diff[i][j] = (1.0 - b) * rho2(i, j) - b * rho1(i, j);
    }
  }
  const SymmetricEigen<8> eig = jacobi_eigen<8>(diff);

  // alpha = 1 - Tr[Pi rho1]; both traces accumulate v^T rho v over the
  // negative-eigenvalue columns.
  double in1 = 0.0, in2 = 0.0;
  for (int k = 0; k < 8; ++k) {
    if (eig.values[k] >= -1e-12) continue;
    double q1 = 0.0, q2 = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double vi = eig.vectors[i][k];
      if (vi == 0.0) continue;
      double r1 = 0.0, r2 = 0.0;
      for (int j = 0; j < 8; ++j) {
        r1 += rho1(i, j) * eig.vectors[j][k];
        r2 += rho2(i, j) * eig.vectors[j][k];
      }
      q1 += vi * r1;
      q2 += vi * r2;
    }
    in1 += q1;
    in2 += q2;
  }
  const double alpha = std::fmin(1.0, std::fmax(0.0, 1.0 - in1));
  const double beta = std::fmin(1.0, std::fmax(0.0, in2));
  return {alpha, beta};
}

}  // namespace qcluster

#endif
