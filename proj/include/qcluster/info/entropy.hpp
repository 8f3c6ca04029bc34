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

#ifndef QCLUSTER_INFO_ENTROPY_HPP
#define QCLUSTER_INFO_ENTROPY_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/errors.hpp"
#include "qcluster/info/histogram.hpp"

namespace qcluster {

/// Plugin (empirical-frequency) Shannon entropy in bits.
inline double plugin_entropy(const CategoricalHistogram& hist) {
  if (hist.total == 0) throw DomainError("entropy of an empty histogram");
  const double n = static_cast<double>(hist.total);
  double h = 0.0;
  for (const auto& [outcome, c] : hist.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

/// First-order deficit of the plugin estimator: over P possible outcomes and
/// N samples its mean is below the true entropy by (P-1)/(2N) log2(e).
inline double entropy_bias(std::uint64_t P, std::uint64_t N) {
  if (P < 1 || N < 1) throw DomainError("entropy_bias needs P, N >= 1");
  return static_cast<double>(P - 1) / (2.0 * static_cast<double>(N)) *
         std::log2(std::exp(1.0));
}

/// Distribution-free bound on the plugin estimator's variance: log2^2(N)/N.
inline double entropy_variance_bound(std::uint64_t N) {
  if (N < 1) throw DomainError("entropy_variance_bound needs N >= 1");
  const double l = std::log2(static_cast<double>(N));
  return l * l / static_cast<double>(N);
}

/// Conditional entropy given a uniformly distributed conditioning variable:
/// the unweighted mean of the per-outcome plugin entropies.
inline double conditional_entropy_uniform(
    const std::vector<CategoricalHistogram>& per_a_hists) {
  if (per_a_hists.empty()) {
    throw DomainError("conditional entropy of an empty histogram list");
  }
  double sum = 0.0;
  for (const CategoricalHistogram& h : per_a_hists) {
    if (h.total == 0) {
      throw InsufficientSamplesError(
          "conditional entropy: empty per-outcome histogram");
    }
    sum += plugin_entropy(h);
  }
  return sum / static_cast<double>(per_a_hists.size());
}

enum class MiMethod {
  kJointPlugin,
  kFixedAScheme,
};

/// Mutual-information estimate with explicit bias and variance accounting.
/// The bias is reported, never silently added to the value.
struct MiEstimate {
  double value = 0.0;           // bits
  double variance_bound = 0.0;  // bits^2
  double bias = 0.0;            // bits, signed
  MiMethod method = MiMethod::kJointPlugin;
};

/// Joint plugin MI for samples stratified with equal counts per A outcome
/// (A uniform over {0..m}): value = H(D) - mean_a H(D | A = a), with the
/// closed-form logarithmic variance bound and first-order bias.
inline MiEstimate mi_plugin(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples,
    std::uint64_t m) {
  if (samples.empty()) throw DomainError("mi_plugin on an empty sample list");
  const std::uint64_t n_a = m + 1;
  CategoricalHistogram d_marginal;
  std::vector<CategoricalHistogram> per_a(n_a);
  for (const auto& [a, d] : samples) {
    if (a >= n_a) {
      throw DomainError("A outcome " + std::to_string(a) +
                        " exceeds max index " + std::to_string(m));
    }
    d_marginal.add(d);
    per_a[a].add(d);
  }
  const std::uint64_t stratum = per_a[0].total;
  for (const CategoricalHistogram& h : per_a) {
    if (h.total != stratum) {
      throw DomainError(
          "mi_plugin requires equal strata per A outcome; "
          "use the fixed-A scheme for unstratified samples");
    }
  }
  const double n = static_cast<double>(d_marginal.total);
  MiEstimate est;
  est.method = MiMethod::kJointPlugin;
  est.value = plugin_entropy(d_marginal) - conditional_entropy_uniform(per_a);
  const double l_all = std::log2(n);
  const double l_strat = std::log2(n / static_cast<double>(n_a));
  est.variance_bound =
      (l_all * l_all + static_cast<double>(n_a) * l_strat * l_strat) / n;
  est.bias = static_cast<double>(m) * static_cast<double>(m) / (2.0 * n) *
             std::log2(std::exp(1.0));
  return est;
}

namespace detail {

/// Combination step of the fixed-A scheme, split out so the arithmetic can
/// be checked against hand-computed entropy values: the estimate is the
/// marginal entropy minus the mean conditional entropy, with the empirical
/// variance of the conditional entropies as the spread measure and zero
/// bias (both terms carry the same first-order deficit, which cancels).
inline MiEstimate fixed_a_combine(double h_d,
                                  const std::vector<double>& h_conditional) {
  MiEstimate est;
  est.method = MiMethod::kFixedAScheme;
  const double k = static_cast<double>(h_conditional.size());
  double mean = 0.0;
  for (double h : h_conditional) mean += h;
  mean /= k;
  est.value = h_d - mean;
  est.bias = 0.0;
  double ss = 0.0;
  for (double h : h_conditional) ss += (h - mean) * (h - mean);
  est.variance_bound = h_conditional.size() > 1 ? ss / (k - 1.0) : 0.0;
  return est;
}

}  // namespace detail

/// Fixed-A conditional-entropy scheme for scenarios whose outcome space is
/// too large for the joint estimator: one histogram of D from runs with
/// random truths, plus one histogram per fixed truth, all with the same
/// sample count. Every conditional histogram must satisfy the sample-size
/// condition (observed outcomes) / N < 1/10 for the bias expansion (and so
/// its cancellation) to be trustworthy.
inline MiEstimate mi_fixed_a_scheme(
    const CategoricalHistogram& h_d,
    const std::vector<CategoricalHistogram>& h_d_given_a) {
  if (h_d_given_a.empty()) {
    throw DomainError("fixed-A scheme needs at least one conditional");
  }
  if (h_d.total == 0) throw DomainError("fixed-A scheme: empty D histogram");
  for (const CategoricalHistogram& h : h_d_given_a) {
    if (h.total != h_d.total) {
      throw DomainError(
          "fixed-A scheme requires the same N for every histogram");
    }
    if (h.total < 10 * h.support_size()) {
      throw InsufficientSamplesError(
          "fixed-A scheme: conditional histogram with " +
          std::to_string(h.support_size()) + " outcomes needs N >= " +
          std::to_string(10 * h.support_size()) + ", got " +
          std::to_string(h.total));
    }
  }
  std::vector<double> conds;
  conds.reserve(h_d_given_a.size());
  for (const CategoricalHistogram& h : h_d_given_a) {
    conds.push_back(plugin_entropy(h));
  }
  return detail::fixed_a_combine(plugin_entropy(h_d), conds);
}

}  // namespace qcluster

#endif
