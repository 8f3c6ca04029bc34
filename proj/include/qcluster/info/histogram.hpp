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

#ifndef QCLUSTER_INFO_HISTOGRAM_HPP
#define QCLUSTER_INFO_HISTOGRAM_HPP

#include <cstdint>
#include <map>

namespace qcluster {

/// Counts of canonical categorical outcomes. The ordered map keeps
/// iteration deterministic, and merging partial histograms is associative,
/// so per-thread accumulation commutes with aggregation.
struct CategoricalHistogram {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total = 0;

  void add(std::uint64_t outcome, std::uint64_t n = 1) {
    counts[outcome] += n;
    total += n;
  }

  void merge(const CategoricalHistogram& other) {
    for (const auto& [outcome, n] : other.counts) counts[outcome] += n;
    total += other.total;
  }

  /// Number of distinct outcomes actually observed.
  std::size_t support_size() const { return counts.size(); }
};

}  // namespace qcluster

#endif
