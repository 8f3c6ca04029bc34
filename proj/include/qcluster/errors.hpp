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

#ifndef QCLUSTER_ERRORS_HPP
#define QCLUSTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcluster {

/// Invalid parameters, infeasible scene configurations, malformed config
/// files. Maps to process exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument outside an operation's documented domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// Internal consistency or numerical failure (diagonalization residual,
/// eigensolver non-convergence, invariant violation). Maps to exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A histogram is too small for the requested estimator.
class InsufficientSamplesError : public std::runtime_error {
 public:
  explicit InsufficientSamplesError(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// A particle placement could not be completed (surface too crowded or the
/// requested count is geometrically infeasible).
class PlacementError : public std::runtime_error {
 public:
  explicit PlacementError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qcluster

#endif
