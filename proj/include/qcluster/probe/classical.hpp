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

#ifndef QCLUSTER_PROBE_CLASSICAL_HPP
#define QCLUSTER_PROBE_CLASSICAL_HPP

#include <cmath>
#include <string>

#include "qcluster/errors.hpp"

namespace qcluster {

/// A pair of pure-loss channels to be discriminated, probed with a mean
/// photon number budget per pixel.
struct LossChannelPair {
  double tau0 = 0.95;       // transmissivity of channel 0, in (0, 1]
  double tau1 = 0.4;        // transmissivity of channel 1, in (0, 1]
  double mean_photons = 8;  // per-pixel probe energy m, >= 0

  void validate() const {
    if (!(tau0 > 0.0 && tau0 <= 1.0)) {
      throw ConfigError("tau0 must be in (0, 1], got " + std::to_string(tau0));
    }
    if (!(tau1 > 0.0 && tau1 <= 1.0)) {
      throw ConfigError("tau1 must be in (0, 1], got " + std::to_string(tau1));
    }
    if (!(mean_photons >= 0.0)) {
      throw ConfigError("mean_photons must be >= 0, got " +
                        std::to_string(mean_photons));
    }
  }
};

/// Single-photon coherent overlap chi = exp(-(sqrt(tau0)-sqrt(tau1))^2 / 2).
/// The outputs of the two channels on a coherent probe of energy m have
/// fidelity chi^m.
inline double channel_overlap(const LossChannelPair& pair) {
  const double d = std::sqrt(pair.tau0) - std::sqrt(pair.tau1);
  return std::exp(-0.5 * d * d);
}

/// Fidelity between the two channel outputs for the best classical
/// (positive-P) probe at mean photon number m: F = chi^m.
inline double classical_fidelity(const LossChannelPair& pair) {
  pair.validate();
  return std::pow(channel_overlap(pair), pair.mean_photons);
}

/// Minimum type-1 error achievable at a given type-2 error when
/// discriminating two pure states of fidelity F:
///   alpha(beta) = beta - 2 beta F^2 + F (F - 2 sqrt((1-beta) beta (1-F^2))).
/// Only the monotone trade-off branch beta in [0, F^2] is meaningful; the
/// printed expression is non-monotone outside it.
inline double classical_alpha(double beta, double F) {
  if (!(F > 0.0 && F <= 1.0)) {
    throw DomainError("fidelity must be in (0, 1], got " + std::to_string(F));
  }
  const double f2 = F * F;
  if (!(beta >= 0.0 && beta <= f2)) {
    throw DomainError("beta outside the trade-off branch [0, F^2]: beta=" +
                      std::to_string(beta) + ", F^2=" + std::to_string(f2));
  }
  // Clamp the radicand: round-off can push it a hair below zero at the
  // branch endpoints.
  const double radicand = std::fmax(0.0, (1.0 - beta) * beta * (1.0 - f2));
  const double alpha =
      beta - 2.0 * beta * f2 + F * (F - 2.0 * std::sqrt(radicand));
  return std::fmin(1.0, std::fmax(0.0, alpha));
}

/// Inverse of classical_alpha on the branch: the unique beta in [0, F^2]
/// with classical_alpha(beta, F) = alpha, found by bisection (alpha is
/// strictly decreasing in beta on the branch, from F^2 down to 0).
inline double classical_beta(double alpha, double F) {
  if (!(F > 0.0 && F <= 1.0)) {
    throw DomainError("fidelity must be in (0, 1], got " + std::to_string(F));
  }
  const double f2 = F * F;
  if (!(alpha >= 0.0 && alpha <= f2)) {
    throw DomainError("alpha outside [0, F^2]: alpha=" + std::to_string(alpha) +
                      ", F^2=" + std::to_string(f2));
  }
  double lo = 0.0, hi = f2;  // alpha(lo) = F^2 >= alpha >= 0 = alpha(hi)
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (classical_alpha(mid, F) >= alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Fidelity achieved by a two-point mixture of coherent probes: weight p0 at
/// energy n0 and weight 1-p0 at energy n0 + (m-n0)/(1-p0), which keeps the
/// mean at m. Used to spot-check that no such mixture beats the pure probe
/// (f >= chi^m by convexity of chi^x).
inline double mixture_fidelity_candidate(double n0, double p0,
                                         const LossChannelPair& pair) {
  pair.validate();
  const double m = pair.mean_photons;
  if (!(n0 >= 0.0 && n0 <= m)) {
    throw DomainError("n0 must be in [0, m], got " + std::to_string(n0));
  }
  if (!(p0 >= 0.0 && p0 < 1.0)) {
    throw DomainError("p0 must be in [0, 1), got " + std::to_string(p0));
  }
  const double chi = channel_overlap(pair);
  const double delta = (m - n0) / (1.0 - p0);
  return std::pow(chi, n0) * (p0 + (1.0 - p0) * std::pow(chi, delta));
}

}  // namespace qcluster

#endif
