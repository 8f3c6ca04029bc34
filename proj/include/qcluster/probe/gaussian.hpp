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

#ifndef QCLUSTER_PROBE_GAUSSIAN_HPP
#define QCLUSTER_PROBE_GAUSSIAN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qcluster/errors.hpp"
#include "qcluster/probe/classical.hpp"

namespace qcluster {

/// 4x4 real symmetric covariance matrix of a two-mode Gaussian state in the
/// (x1, p1, x2, p2) quadrature ordering, vacuum normalized to the identity.
/// Mode 1 is the retained idler, mode 2 the probe sent through the channel.
struct CovarianceMatrix2Mode {
  std::array<std::array<double, 4>, 4> m{};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }
};

/// Covariance matrix of a two-mode squeezed vacuum of mean photon number m
/// per mode after the probe mode passes a loss channel of transmissivity
/// tau: diagonal blocks (2m+1) I and (2 m tau + 1) I, off-diagonal block
/// 2 sqrt(tau m (m+1)) Z with Z = diag(1, -1).
inline CovarianceMatrix2Mode tmsv_output_covariance(double tau, double m) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw DomainError("tau must be in (0, 1], got " + std::to_string(tau));
  }
  if (!(m >= 0.0)) {
    throw DomainError("mean photons must be >= 0, got " + std::to_string(m));
  }
  const double a = 2.0 * m + 1.0;
  const double b = 2.0 * m * tau + 1.0;
  const double c = 2.0 * std::sqrt(tau * m * (m + 1.0));
  CovarianceMatrix2Mode v;
  v(0, 0) = a;
  v(1, 1) = a;
  v(2, 2) = b;
  v(3, 3) = b;
  v(0, 2) = v(2, 0) = c;
  v(1, 3) = v(3, 1) = -c;
  return v;
}

/// Symplectic eigenvalues {nu_minus, nu_plus} of a covariance matrix with
/// the tmsv_output_covariance block structure (a I, b I, c Z), via the
/// two-mode invariants Delta = a^2 + b^2 - 2 c^2 and det V = (a b - c^2)^2:
///   nu_pm^2 = (Delta pm sqrt(Delta^2 - 4 det V)) / 2.
inline std::array<double, 2> symplectic_eigenvalues(
    const CovarianceMatrix2Mode& v) {
  const double a = v(0, 0);
  const double b = v(2, 2);
  const double c = v(0, 2);
  const double delta = a * a + b * b - 2.0 * c * c;
  const double det = (a * b - c * c) * (a * b - c * c);
  const double disc = std::sqrt(std::fmax(0.0, delta * delta - 4.0 * det));
  const double lo = std::sqrt(std::fmax(0.0, 0.5 * (delta - disc)));
  const double hi = std::sqrt(std::fmax(0.0, 0.5 * (delta + disc)));
  return {lo, hi};
}

/// Symplectic matrix of a two-mode squeezing operation with parameter r in
/// the (x1, p1, x2, p2) ordering: cosh(r) on the diagonal, sinh(r) Z on the
/// off-diagonal block.
inline CovarianceMatrix2Mode two_mode_squeeze_symplectic(double r) {
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  CovarianceMatrix2Mode m;
  m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = c;
  m(0, 2) = m(2, 0) = s;
  m(1, 3) = m(3, 1) = -s;
  return m;
}

inline CovarianceMatrix2Mode matmul(const CovarianceMatrix2Mode& a,
                                    const CovarianceMatrix2Mode& b) {
  CovarianceMatrix2Mode r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

/// S V S^T for a symmetric symplectic S (the two-mode squeezers used here
/// are symmetric, so no explicit transpose is needed).
inline CovarianceMatrix2Mode conjugate_symmetric(const CovarianceMatrix2Mode& s,
                                                 const CovarianceMatrix2Mode& v) {
  return matmul(matmul(s, v), s);
}

/// Parameters putting each channel output into vacuum-tensor-thermal form.
/// nbar_i is the thermal occupation of the non-vacuum mode; r_i is the
/// two-mode squeezing parameter whose inverse squeezer diagonalizes the
/// output covariance; r is the relative parameter of the squeezer taking
/// one diagonal frame to the other.
struct DiagonalizationParams {
  double nbar0 = 0.0;
  double nbar1 = 0.0;
  double r0 = 0.0;
  double r1 = 0.0;
  double r = 0.0;
};

namespace detail {

/// Residual of the claim that S(-r) diagonalizes v to a thermal-tensor-vacuum
/// covariance with occupation nbar: max absolute off-diagonal entry plus the
/// mismatch of the sorted diagonal against {1, 1, 2 nbar + 1, 2 nbar + 1}.
/// The check is insensitive to which mode carries the thermal part.
inline double diagonalization_residual(const CovarianceMatrix2Mode& v,
                                       double r, double nbar) {
  const CovarianceMatrix2Mode d =
      conjugate_symmetric(two_mode_squeeze_symplectic(-r), v);
  double res = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) res = std::fmax(res, std::fabs(d(i, j)));
    }
  }
  std::array<double, 4> diag = {d(0, 0), d(1, 1), d(2, 2), d(3, 3)};
  std::sort(diag.begin(), diag.end());
  const std::array<double, 4> want = {1.0, 1.0, 2.0 * nbar + 1.0,
                                      2.0 * nbar + 1.0};
  for (int i = 0; i < 4; ++i) res = std::fmax(res, std::fabs(diag[i] - want[i]));
  return res;
}

/// Squeezing parameter that zeroes the off-diagonal block of a covariance
/// with blocks (a I, b I, c Z): tanh(2 r) = 2 c / (a + b).
inline double diagonalizing_r(const CovarianceMatrix2Mode& v) {
  const double a = v(0, 0);
  const double b = v(2, 2);
  const double c = v(0, 2);
  if (c == 0.0) return 0.0;
  return 0.5 * std::atanh(2.0 * c / (a + b));
}

}  // namespace detail

/// Computes, for each channel of the pair, the thermal occupation and the
/// squeezing parameter that diagonalize the TMSV output covariance, plus the
/// relative parameter r of the frame change between the two channels. Each
/// claimed diagonalization is verified numerically to residual 1e-9.
inline DiagonalizationParams diagonalizing_params(const LossChannelPair& pair) {
  pair.validate();
  DiagonalizationParams out;
  const std::array<double, 2> taus = {pair.tau0, pair.tau1};
  std::array<double, 2> nbars{};
  std::array<double, 2> rs{};
  for (int i = 0; i < 2; ++i) {
    const CovarianceMatrix2Mode v =
        tmsv_output_covariance(taus[i], pair.mean_photons);
    const std::array<double, 2> nu = symplectic_eigenvalues(v);
    nbars[i] = 0.5 * (nu[1] - 1.0);
    rs[i] = detail::diagonalizing_r(v);
    const double res = detail::diagonalization_residual(v, rs[i], nbars[i]);
    if (!(res <= 1e-9)) {
      throw NumericError("covariance diagonalization residual " +
                         std::to_string(res) + " exceeds 1e-9 for tau=" +
                         std::to_string(taus[i]));
    }
  }
  out.nbar0 = nbars[0];
  out.nbar1 = nbars[1];
  out.r0 = rs[0];
  out.r1 = rs[1];
  // Relative parameter of the squeezer taking frame 1 to frame 0. Only
  // cosh(r) enters downstream, so the overall sign is immaterial; the
  // difference convention is fixed by the per-channel residual checks above.
  out.r = rs[0] - rs[1];
  return out;
}

}  // namespace qcluster

#endif
