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

#ifndef QCLUSTER_SIM_IO_HPP
#define QCLUSTER_SIM_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/errors.hpp"
#include "qcluster/probe/roc.hpp"
#include "qcluster/scene/grid.hpp"

namespace qcluster {

/// Shortest-of-12-significant-digits float formatting used for every CSV
/// cell, so outputs are byte-stable across runs and thread counts.
inline std::string fmt_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

/// Writes the two ROC curves on a shared alpha grid:
/// header alpha,beta_classical,beta_quantum, one row per grid point.
inline void write_roc_csv(std::ostream& out, const RocCurve& classical,
                          const RocCurve& quantum, double alpha_max,
                          int n_points) {
  if (n_points < 2) throw DomainError("need at least 2 ROC output points");
  out << "alpha,beta_classical,beta_quantum\n";
  for (int i = 0; i < n_points; ++i) {
    const double alpha = alpha_max * i / (n_points - 1);
    out << fmt_g12(alpha) << ',' << fmt_g12(roc_lookup(classical, alpha))
        << ',' << fmt_g12(roc_lookup(quantum, alpha)) << '\n';
  }
}

/// Reads a ROC CSV back into the two curves.
inline std::pair<RocCurve, RocCurve> load_roc_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open ROC file " + path);
  std::string line;
  if (!std::getline(in, line) || line != "alpha,beta_classical,beta_quantum") {
    throw ConfigError("ROC file " + path + " has an unexpected header");
  }
  RocCurve classical, quantum;
  classical.kind = RocKind::kClassicalOptimalLowerBound;
  quantum.kind = RocKind::kQuantumAchievableUpperBound;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    double v[3];
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(row, cell, ',')) {
        throw ConfigError("ROC file " + path + " has a malformed row");
      }
      try {
        v[i] = std::stod(cell);
      } catch (const std::exception&) {
        throw ConfigError("ROC file " + path + " has a non-numeric cell");
      }
    }
    classical.points.push_back({v[0], v[1]});
    quantum.points.push_back({v[0], v[2]});
  }
  classical.validate();
  quantum.validate();
  return {std::move(classical), std::move(quantum)};
}

/// Row-major 0/1 text rendering of a pattern (debug dumps and the cluster
/// subcommand's input format).
inline void write_pattern_text(std::ostream& out,
                               const ChannelPattern& pattern) {
  for (int r = 0; r < pattern.side; ++r) {
    for (int c = 0; c < pattern.side; ++c) {
      out << static_cast<char>('0' + pattern.at(r, c));
    }
    out << '\n';
  }
}

/// Parses a 0/1 text grid: equal-length lines of 0s and 1s.
inline ChannelPattern load_pattern_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pattern file " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ConfigError("pattern file " + path + " is empty");
  const int side = static_cast<int>(lines.size());
  ChannelPattern pattern(side);
  for (int r = 0; r < side; ++r) {
    if (static_cast<int>(lines[r].size()) != side) {
      throw ConfigError("pattern file " + path + " is not a square grid");
    }
    for (int c = 0; c < side; ++c) {
      const char ch = lines[r][c];
      if (ch != '0' && ch != '1') {
        throw ConfigError("pattern file " + path +
                          " contains a character other than 0/1");
      }
      pattern.at(r, c) = static_cast<std::uint8_t>(ch - '0');
    }
  }
  return pattern;
}

}  // namespace qcluster

#endif
