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

#ifndef QCLUSTER_PROBE_ROC_HPP
#define QCLUSTER_PROBE_ROC_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/errors.hpp"
#include "qcluster/probe/classical.hpp"
#include "qcluster/probe/helstrom.hpp"
#include "qcluster/probe/three_qubit.hpp"

namespace qcluster {

enum class RocKind {
  kClassicalOptimalLowerBound,
  kQuantumAchievableUpperBound,
};

struct RocPoint {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Ordered achievable (type-1, type-2) error pairs for one probe family.
/// Along the list alpha is strictly increasing and beta non-increasing.
struct RocCurve {
  std::vector<RocPoint> points;
  RocKind kind = RocKind::kClassicalOptimalLowerBound;

  void validate() const {
    if (points.empty()) throw NumericError("ROC curve has no points");
    for (std::size_t i = 0; i < points.size(); ++i) {
      const RocPoint& p = points[i];
      if (!(p.alpha >= 0.0 && p.alpha <= 1.0 && p.beta >= 0.0 &&
            p.beta <= 1.0)) {
        throw NumericError("ROC point outside the unit square");
      }
      if (i > 0) {
        if (!(p.alpha > points[i - 1].alpha)) {
          throw NumericError("ROC alphas not strictly increasing");
        }
        if (!(p.beta <= points[i - 1].beta)) {
          throw NumericError("ROC betas not non-increasing");
        }
      }
    }
  }
};

/// Linear interpolation of beta at the requested alpha; alpha must lie
/// within the curve's stored domain.
inline double roc_lookup(const RocCurve& curve, double alpha) {
  if (curve.points.empty()) throw DomainError("ROC curve is empty");
  const double lo = curve.points.front().alpha;
  const double hi = curve.points.back().alpha;
  if (!(alpha >= lo && alpha <= hi)) {
    throw DomainError("alpha " + std::to_string(alpha) +
                      " outside ROC domain [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  const auto it = std::lower_bound(
      curve.points.begin(), curve.points.end(), alpha,
      [](const RocPoint& p, double a) { return p.alpha < a; });
  if (it->alpha == alpha) return it->beta;
  const RocPoint& right = *it;
  const RocPoint& left = *(it - 1);
  const double t = (alpha - left.alpha) / (right.alpha - left.alpha);
  return left.beta + t * (right.beta - left.beta);
}

/// Classical-optimal curve sampled on an even alpha grid. Beyond the branch
/// endpoint alpha = F^2 a type-2 error of zero is achievable, so the curve
/// is extended flat there (only relevant for near-identical channel pairs).
inline RocCurve classical_roc_curve(const LossChannelPair& pair,
                                    double alpha_max = 0.05,
                                    int n_points = 101) {
  if (n_points < 2) throw DomainError("need at least 2 ROC grid points");
  if (!(alpha_max > 0.0 && alpha_max <= 1.0)) {
    throw DomainError("alpha_max must be in (0, 1]");
  }
  const double f = classical_fidelity(pair);
  RocCurve curve;
  curve.kind = RocKind::kClassicalOptimalLowerBound;
  curve.points.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double alpha = alpha_max * i / (n_points - 1);
    const double beta = (alpha >= f * f) ? 0.0 : classical_beta(alpha, f);
    curve.points.push_back({alpha, beta});
  }
  curve.validate();
  return curve;
}

namespace detail {

/// Lower convex hull (Andrew monotone chain) of a point cloud in the
/// (alpha, beta) plane. Input order is irrelevant: points are sorted first.
inline std::vector<RocPoint> lower_convex_hull(std::vector<RocPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RocPoint& a, const RocPoint& b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
  });
  std::vector<RocPoint> hull;
  for (const RocPoint& p : pts) {
    while (hull.size() >= 2) {
      const RocPoint& a = hull[hull.size() - 2];
      const RocPoint& b = hull[hull.size() - 1];
      // Keep b only if it lies strictly below the chord a-p; collinear
      // points are dropped.
      const double cross = (b.alpha - a.alpha) * (p.beta - a.beta) -
                           (b.beta - a.beta) * (p.alpha - a.alpha);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    if (!hull.empty() && hull.back().alpha == p.alpha) continue;
    hull.push_back(p);
  }
  return hull;
}

/// b-grid covering [0, 1] with logarithmically dense points near both
/// endpoints (where the extreme-alpha parts of the curve live) plus an even
/// backbone. Returns a sorted list of about `size` values including 0 and 1.
inline std::vector<double> endpoint_dense_grid(int size) {
  const int n_geo = size / 4;
  const int n_uni = size - 2 * n_geo;
  std::vector<double> g;
  g.reserve(size);
  for (int i = 0; i < n_uni; ++i) {
    g.push_back(static_cast<double>(i) / (n_uni - 1));
  }
  // Geometric ladder from 0.5 down to ~1e-8, mirrored about 0.5.
  if (n_geo > 0) {
    const double ratio = std::pow(2e-8, 1.0 / n_geo);
    double v = 0.5;
    for (int k = 0; k < n_geo; ++k) {
      v *= ratio;
      g.push_back(v);
      g.push_back(1.0 - v);
    }
  }
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace detail

/// Quantum-achievable curve: sweep the preparation weight a and the
/// measurement weight b over a grid, collect the Helstrom error pairs, and
/// take the lower convex hull (mixing measurement settings achieves convex
/// combinations), restricted to alpha in [0, alpha_max].
inline RocCurve quantum_roc(const LossChannelPair& pair, int a_grid_size = 512,
                            int b_grid_size = 512, double alpha_max = 0.05) {
  if (a_grid_size < 2 || b_grid_size < 2) {
    throw DomainError("ROC grid sizes must be >= 2");
  }
  if (!(alpha_max > 0.0 && alpha_max <= 1.0)) {
    throw DomainError("alpha_max must be in (0, 1]");
  }
  const DiagonalizationParams params = diagonalizing_params(pair);
  const std::vector<double> b_grid = detail::endpoint_dense_grid(b_grid_size);

  std::vector<RocPoint> cloud;
  cloud.reserve(static_cast<std::size_t>(a_grid_size) * b_grid.size());
  for (int ia = 0; ia < a_grid_size; ++ia) {
    const double a = static_cast<double>(ia) / (a_grid_size - 1);
    const auto [rho1, rho2] = build_output_states(params, a);
    for (const double b : b_grid) {
      const auto [alpha, beta] = helstrom_errors(rho1, rho2, b);
      cloud.push_back({alpha, beta});
    }
  }
  if (cloud.empty()) throw NumericError("empty ROC point cloud");

  std::vector<RocPoint> hull = detail::lower_convex_hull(std::move(cloud));

  // Clip the hull to [0, alpha_max]: keep interior vertices and interpolate
  // a terminal point exactly at alpha_max.
  RocCurve curve;
  curve.kind = RocKind::kQuantumAchievableUpperBound;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (hull[i].alpha > alpha_max) {
      if (!curve.points.empty() && i > 0) {
        const RocPoint& l = hull[i - 1];
        const RocPoint& r = hull[i];
        const double t = (alpha_max - l.alpha) / (r.alpha - l.alpha);
        curve.points.push_back({alpha_max, l.beta + t * (r.beta - l.beta)});
      }
      break;
    }
    curve.points.push_back(hull[i]);
  }
  if (curve.points.empty()) throw NumericError("ROC hull empty after clip");
  // The b = 1 endpoint lands at alpha = 0 up to round-off; snap it so the
  // curve's domain starts exactly at zero.
  if (curve.points.front().alpha <= 1e-10) curve.points.front().alpha = 0.0;
  curve.validate();
  return curve;
}

}  // namespace qcluster

#endif
