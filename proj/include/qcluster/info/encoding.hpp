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

#ifndef QCLUSTER_INFO_ENCODING_HPP
#define QCLUSTER_INFO_ENCODING_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "qcluster/cluster/kmedoids.hpp"
#include "qcluster/errors.hpp"
#include "qcluster/scene/attractors.hpp"

namespace qcluster {

/// Dense code of an unordered index pair 0 <= i < j < P: pairs are numbered
/// in lexicographic order, giving codes 0 .. C(P,2)-1.
inline std::uint64_t pair_code(std::uint64_t i, std::uint64_t j,
                               std::uint64_t P) {
  if (!(i < j && j < P)) {
    throw DomainError("pair_code requires i < j < P");
  }
  return i * P - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of pair_code (test and inspection helper).
inline std::pair<std::uint64_t, std::uint64_t> pair_decode(std::uint64_t code,
                                                           std::uint64_t P) {
  std::uint64_t i = 0;
  std::uint64_t row = P - 1;  // number of codes with first index i
  while (code >= row) {
    code -= row;
    --row;
    ++i;
  }
  return {i, i + code + 1};
}

/// Number of unordered pixel pairs on a d x d grid; one extra code beyond
/// the largest pair code is reserved for the degenerate clustering outcome.
inline std::uint64_t pair_code_count(int side) {
  const std::uint64_t p = static_cast<std::uint64_t>(side) * side;
  return p * (p - 1) / 2;
}

inline std::uint64_t degenerate_code(int side) {
  return pair_code_count(side);
}

/// Canonical categorical outcome of an attractor ground truth: the code of
/// its (already lexicographically sorted) pixel pair.
inline std::uint64_t attractor_truth_code(const AttractorTruth& truth,
                                          const GridSpec& grid) {
  const std::uint64_t p = static_cast<std::uint64_t>(grid.side) * grid.side;
  const std::uint64_t i =
      static_cast<std::uint64_t>(truth.r1) * grid.side + truth.c1;
  const std::uint64_t j =
      static_cast<std::uint64_t>(truth.r2) * grid.side + truth.c2;
  return pair_code(i, j, p);
}

/// Canonical categorical outcome of a two-medoid clustering result; the
/// degenerate flag maps to the reserved code past all pair codes.
inline std::uint64_t kmedoids_outcome_code(const KMedoidsResult& result,
                                           const GridSpec& grid) {
  if (result.degenerate) return degenerate_code(grid.side);
  if (result.medoids.size() != 2) {
    throw DomainError("pair encoding requires exactly 2 medoids");
  }
  const std::uint64_t p = static_cast<std::uint64_t>(grid.side) * grid.side;
  const std::uint64_t i =
      static_cast<std::uint64_t>(result.medoids[0].first) * grid.side +
      result.medoids[0].second;
  const std::uint64_t j =
      static_cast<std::uint64_t>(result.medoids[1].first) * grid.side +
      result.medoids[1].second;
  return pair_code(i, j, p);
}

}  // namespace qcluster

#endif
