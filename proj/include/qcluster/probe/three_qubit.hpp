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

#ifndef QCLUSTER_PROBE_THREE_QUBIT_HPP
#define QCLUSTER_PROBE_THREE_QUBIT_HPP

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "qcluster/errors.hpp"
#include "qcluster/probe/gaussian.hpp"
#include "qcluster/probe/jacobi.hpp"

namespace qcluster {

/// 8x8 real symmetric density matrix in the basis |control, qubit-from-mode-1,
/// qubit-from-mode-2>, index = 4*control + 2*q1 + q2. The discrimination
/// problem reduces to sparse states of this form: at most nine nonzero
/// entries for control weight a in (0, 1).
struct ThreeQubitState {
  std::array<std::array<double, 8>, 8> m{};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < 8; ++i) t += m[i][i];
    return t;
  }

  int nonzero_count() const {
    int n = 0;
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        if (m[i][j] != 0.0) ++n;
      }
    }
    return n;
  }

  double min_eigenvalue() const {
    const SymmetricEigen<8> eig = jacobi_eigen<8>(m);
    double lo = eig.values[0];
    for (double v : eig.values) lo = std::fmin(lo, v);
    return lo;
  }
};

namespace detail {

/// Fills the common sparsity pattern shared by both hypothesis states: a
/// clean thermal-qubit part with weight `w_clean` on the control branch
/// `clean_branch` (0 or 1), and a squeezer-dressed part with weight
/// `1 - w_clean` on the other branch, plus the control coherences.
/// x = 1/(nbar+1) is the thermal ground occupation, y = 1/cosh(r).
inline ThreeQubitState assemble_output_state(double a, double x, double y,
                                             int clean_branch) {
  const double y2 = y * y;
  const double d = 1.0 - (1.0 - x) * y2;
  const double w_clean = (clean_branch == 0) ? a : 1.0 - a;
  const double w_dress = 1.0 - w_clean;
  const double coh = std::sqrt(a * (1.0 - a));
  const int c = 4 * clean_branch;        // base index of the clean branch
  const int g = 4 * (1 - clean_branch);  // base index of the dressed branch

  ThreeQubitState rho;
  rho(c + 0, c + 0) = w_clean * x;
  rho(c + 1, c + 1) = w_clean * (1.0 - x);
  rho(g + 0, g + 0) = w_dress * x * y2;
  rho(g + 1, g + 1) = w_dress * (1.0 - x) * x * y2 * y2 / d;
  rho(g + 3, g + 3) = w_dress * (1.0 - y2) / d;
  const double c0 = coh * x * y;
  const double c1 = coh * (1.0 - x) * x * y2 / (1.0 - (1.0 - x) * y);
  rho(0, 4) = rho(4, 0) = c0;
  rho(1, 5) = rho(5, 1) = c1;
  return rho;
}

inline void check_state_invariants(const ThreeQubitState& rho,
                                   const char* name) {
  const double trace_err = std::fabs(rho.trace() - 1.0);
  if (!(trace_err < 1e-12)) {
    throw NumericError(std::string(name) + " trace deviates from 1 by " +
                       std::to_string(trace_err));
  }
  const double min_eig = rho.min_eigenvalue();
  if (!(min_eig >= -1e-10)) {
    throw NumericError(std::string(name) + " has negative eigenvalue " +
                       std::to_string(min_eig));
  }
}

}  // namespace detail

/// Builds the pair of three-qubit output states for control weight a from
/// precomputed diagonalization parameters. State 1 keeps its clean thermal
/// part on the a branch, state 2 on the 1-a branch; the squeezer relating
/// the two diagonal frames enters through y = 1/cosh(r).
inline std::pair<ThreeQubitState, ThreeQubitState> build_output_states(
    const DiagonalizationParams& params, double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw DomainError("control weight a must be in [0, 1], got " +
                      std::to_string(a));
  }
  const double x1 = 1.0 / (params.nbar0 + 1.0);
  const double x2 = 1.0 / (params.nbar1 + 1.0);
  const double y = 1.0 / std::cosh(params.r);
  ThreeQubitState rho1 = detail::assemble_output_state(a, x1, y, 0);
  ThreeQubitState rho2 = detail::assemble_output_state(a, x2, y, 1);
  detail::check_state_invariants(rho1, "rho1");
  detail::check_state_invariants(rho2, "rho2");
  return {rho1, rho2};
}

/// Convenience overload computing the diagonalization parameters first.
inline std::pair<ThreeQubitState, ThreeQubitState> build_output_states(
    const LossChannelPair& pair, double a) {
  return build_output_states(diagonalizing_params(pair), a);
}

}  // namespace qcluster

#endif
