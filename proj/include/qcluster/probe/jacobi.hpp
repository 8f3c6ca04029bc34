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

#ifndef QCLUSTER_PROBE_JACOBI_HPP
#define QCLUSTER_PROBE_JACOBI_HPP

#include <array>
#include <cmath>

#include "qcluster/errors.hpp"

namespace qcluster {

/// Eigen-decomposition of a small real symmetric matrix. Column k of
/// `vectors` (entries vectors[i][k]) is the unit eigenvector for values[k].
template <int N>
struct SymmetricEigen {
  std::array<double, N> values{};
  std::array<std::array<double, N>, N> vectors{};
};

/// Cyclic Jacobi rotations. Converges when the Frobenius norm of the
/// off-diagonal part drops below 1e-13; the matrices used here are tiny
/// (4x4, 8x8), so a handful of sweeps suffices.
template <int N>
SymmetricEigen<N> jacobi_eigen(std::array<std::array<double, N>, N> a) {
  SymmetricEigen<N> out;
  auto& v = out.vectors;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) v[i][j] = (i == j) ? 1.0 : 0.0;
  }

  const auto off_norm = [&a]() {
    double s = 0.0;
    for (int i = 0; i < N; ++i) {
      for (int j = i + 1; j < N; ++j) s += 2.0 * a[i][j] * a[i][j];
    }
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 64;
  int sweep = 0;
  while (off_norm() >= 1e-13) {
    if (++sweep > kMaxSweeps) {
      throw NumericError("Jacobi eigensolver failed to converge");
    }
    for (int p = 0; p < N - 1; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rotate rows/columns p and q of a.
        for (int k = 0; k < N; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < N; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        // Accumulate the rotation into the eigenvector columns.
        for (int k = 0; k < N; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  for (int i = 0; i < N; ++i) out.values[i] = a[i][i];
  return out;
}

}  // namespace qcluster

#endif
