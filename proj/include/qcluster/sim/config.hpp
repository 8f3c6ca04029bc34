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

#ifndef QCLUSTER_SIM_CONFIG_HPP
#define QCLUSTER_SIM_CONFIG_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcluster/errors.hpp"
#include "qcluster/probe/classical.hpp"
#include "qcluster/scene/attractors.hpp"
#include "qcluster/scene/particles.hpp"

namespace qcluster {

enum class Scenario {
  kAttractors,
  kParticles,
};

enum class RocSourceKind {
  kComputed,
  kFile,
};

/// Where the sweep's ROC curves come from: computed in-process on an
/// (a, b) grid, or loaded from a previously written ROC CSV.
struct RocSource {
  RocSourceKind kind = RocSourceKind::kComputed;
  std::string path;   // for kFile
  int a_grid = 512;   // for kComputed
  int b_grid = 512;   // for kComputed
};

/// Full description of one Monte Carlo experiment sweep. The JSON config
/// file mirrors this struct field-for-field; unknown keys are rejected.
struct ExperimentConfig {
  Scenario scenario = Scenario::kParticles;
  GridSpec grid{50};
  AttractorParams attractor_params;
  ParticleParams particle_params;
  LossChannelPair probe;
  std::vector<double> type1_grid;
  std::uint64_t samples_per_point = 20000;
  std::uint64_t master_seed = 1;
  RocSource roc_source;
  int threads = 0;  // 0 = hardware concurrency
  int fixed_truth_count = 5;
  std::string out_dir = ".";
  bool write_records = false;

  void validate() const {
    grid.validate();
    probe.validate();
    if (scenario == Scenario::kAttractors) {
      attractor_params.validate();
    } else {
      particle_params.validate();
    }
    if (type1_grid.empty()) {
      throw ConfigError("type1_grid must not be empty");
    }
    for (std::size_t i = 0; i < type1_grid.size(); ++i) {
      if (!(type1_grid[i] >= 0.0 && type1_grid[i] <= 1.0)) {
        throw ConfigError("type1_grid values must be in [0, 1]");
      }
      if (i > 0 && !(type1_grid[i] > type1_grid[i - 1])) {
        throw ConfigError("type1_grid must be strictly increasing");
      }
    }
    if (samples_per_point < 1) {
      throw ConfigError("samples_per_point must be >= 1");
    }
    if (threads < 0) throw ConfigError("threads must be >= 0");
    if (fixed_truth_count < 1) {
      throw ConfigError("fixed_truth_count must be >= 1");
    }
    if (effective_samples() < 1) {
      throw ConfigError("samples_per_point too small for equal strata");
    }
  }

  /// Per-experiment sample count after stratification: the particles
  /// scenario needs equal strata over the max_particles + 1 truth values,
  /// so the requested count is rounded down to a multiple.
  std::uint64_t effective_samples() const {
    if (scenario != Scenario::kParticles) return samples_per_point;
    const std::uint64_t strata =
        static_cast<std::uint64_t>(particle_params.max_particles) + 1;
    return samples_per_point / strata * strata;
  }

  /// ROC domain upper end: covers the default reporting range and every
  /// requested sweep point.
  double alpha_max() const {
    double m = 0.05;
    for (double a : type1_grid) m = std::max(m, a);
    return m;
  }
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j,
                                const std::set<std::string>& allowed,
                                const std::string& where) {
  if (!j.is_object()) {
    throw ConfigError(where + " must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (allowed.find(key) == allowed.end()) {
      throw ConfigError("unknown key \"" + key + "\" in " + where);
    }
  }
}

template <typename T>
T get_field(const nlohmann::json& j, const std::string& key,
            const std::string& where) {
  if (!j.contains(key)) {
    throw ConfigError("missing required key \"" + key + "\" in " + where);
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("key \"" + key + "\" in " + where +
                      " has the wrong type");
  }
}

template <typename T>
T get_field_or(const nlohmann::json& j, const std::string& key,
               const std::string& where, T fallback) {
  if (!j.contains(key)) return fallback;
  return get_field<T>(j, key, where);
}

}  // namespace detail

/// Parses and validates a config document. Unknown keys anywhere in the
/// document are configuration errors, so typos cannot silently fall back to
/// defaults.
inline ExperimentConfig parse_config(const nlohmann::json& j) {
  detail::reject_unknown_keys(
      j,
      {"scenario", "grid_side", "attractor_params", "particle_params",
       "probe", "type1_grid", "samples_per_point", "master_seed",
       "roc_source", "threads", "fixed_truth_count", "out_dir",
       "write_records"},
      "config");
  ExperimentConfig cfg;
  const std::string scenario =
      detail::get_field<std::string>(j, "scenario", "config");
  if (scenario == "attractors") {
    cfg.scenario = Scenario::kAttractors;
  } else if (scenario == "particles") {
    cfg.scenario = Scenario::kParticles;
  } else {
    throw ConfigError("scenario must be \"attractors\" or \"particles\"");
  }
  cfg.grid.side = detail::get_field<int>(j, "grid_side", "config");

  if (cfg.scenario == Scenario::kAttractors) {
    if (j.contains("particle_params")) {
      throw ConfigError("particle_params given for the attractors scenario");
    }
    if (j.contains("attractor_params")) {
      const nlohmann::json& p = j.at("attractor_params");
      detail::reject_unknown_keys(
          p, {"phi", "sigma2", "min_separation", "edge_margin"},
          "attractor_params");
      cfg.attractor_params.phi =
          detail::get_field_or<double>(p, "phi", "attractor_params", 1.0);
      cfg.attractor_params.sigma2 =
          detail::get_field_or<double>(p, "sigma2", "attractor_params", 2.0);
      cfg.attractor_params.min_separation = detail::get_field_or<double>(
          p, "min_separation", "attractor_params", 8.0);
      cfg.attractor_params.edge_margin = detail::get_field_or<double>(
          p, "edge_margin", "attractor_params", 4.0);
    }
  } else {
    if (j.contains("attractor_params")) {
      throw ConfigError("attractor_params given for the particles scenario");
    }
    if (j.contains("particle_params")) {
      const nlohmann::json& p = j.at("particle_params");
      detail::reject_unknown_keys(p, {"d1", "d2", "max_particles"},
                                  "particle_params");
      cfg.particle_params.d1 =
          detail::get_field_or<int>(p, "d1", "particle_params", 2);
      cfg.particle_params.d2 =
          detail::get_field_or<int>(p, "d2", "particle_params", 5);
      cfg.particle_params.max_particles = detail::get_field_or<int>(
          p, "max_particles", "particle_params", 10);
    }
  }

  if (j.contains("probe")) {
    const nlohmann::json& p = j.at("probe");
    detail::reject_unknown_keys(p, {"tau0", "tau1", "mean_photons"}, "probe");
    cfg.probe.tau0 = detail::get_field_or<double>(p, "tau0", "probe", 0.95);
    cfg.probe.tau1 = detail::get_field_or<double>(p, "tau1", "probe", 0.4);
    cfg.probe.mean_photons =
        detail::get_field_or<double>(p, "mean_photons", "probe", 8.0);
  }

  cfg.type1_grid =
      detail::get_field<std::vector<double>>(j, "type1_grid", "config");
  cfg.samples_per_point =
      detail::get_field<std::uint64_t>(j, "samples_per_point", "config");
  cfg.master_seed =
      detail::get_field<std::uint64_t>(j, "master_seed", "config");

  if (j.contains("roc_source")) {
    const nlohmann::json& r = j.at("roc_source");
    detail::reject_unknown_keys(r, {"kind", "path", "a_grid", "b_grid"},
                                "roc_source");
    const std::string kind =
        detail::get_field<std::string>(r, "kind", "roc_source");
    if (kind == "computed") {
      cfg.roc_source.kind = RocSourceKind::kComputed;
      if (r.contains("path")) {
        throw ConfigError("roc_source.path only applies to kind \"file\"");
      }
      cfg.roc_source.a_grid =
          detail::get_field_or<int>(r, "a_grid", "roc_source", 512);
      cfg.roc_source.b_grid =
          detail::get_field_or<int>(r, "b_grid", "roc_source", 512);
      if (cfg.roc_source.a_grid < 2 || cfg.roc_source.b_grid < 2) {
        throw ConfigError("roc_source grids must be >= 2");
      }
    } else if (kind == "file") {
      cfg.roc_source.kind = RocSourceKind::kFile;
      if (r.contains("a_grid") || r.contains("b_grid")) {
        throw ConfigError("roc_source grids only apply to kind \"computed\"");
      }
      cfg.roc_source.path =
          detail::get_field<std::string>(r, "path", "roc_source");
    } else {
      throw ConfigError("roc_source.kind must be \"computed\" or \"file\"");
    }
  }

  cfg.threads = detail::get_field_or<int>(j, "threads", "config", 0);
  cfg.fixed_truth_count =
      detail::get_field_or<int>(j, "fixed_truth_count", "config", 5);
  cfg.out_dir = detail::get_field_or<std::string>(j, "out_dir", "config", ".");
  cfg.write_records =
      detail::get_field_or<bool>(j, "write_records", "config", false);

  cfg.validate();
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " +
                      e.what());
  }
  return parse_config(j);
}

/// Effective configuration as JSON, with every field explicit; echoed into
/// the run's metadata so outputs are self-describing.
inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["scenario"] =
      cfg.scenario == Scenario::kAttractors ? "attractors" : "particles";
  j["grid_side"] = cfg.grid.side;
  if (cfg.scenario == Scenario::kAttractors) {
    j["attractor_params"] = {
        {"phi", cfg.attractor_params.phi},
        {"sigma2", cfg.attractor_params.sigma2},
        {"min_separation", cfg.attractor_params.min_separation},
        {"edge_margin", cfg.attractor_params.edge_margin}};
  } else {
    j["particle_params"] = {
        {"d1", cfg.particle_params.d1},
        {"d2", cfg.particle_params.d2},
        {"max_particles", cfg.particle_params.max_particles}};
  }
  j["probe"] = {{"tau0", cfg.probe.tau0},
                {"tau1", cfg.probe.tau1},
                {"mean_photons", cfg.probe.mean_photons}};
  j["type1_grid"] = cfg.type1_grid;
  j["samples_per_point"] = cfg.samples_per_point;
  j["master_seed"] = cfg.master_seed;
  if (cfg.roc_source.kind == RocSourceKind::kComputed) {
    j["roc_source"] = {{"kind", "computed"},
                       {"a_grid", cfg.roc_source.a_grid},
                       {"b_grid", cfg.roc_source.b_grid}};
  } else {
    j["roc_source"] = {{"kind", "file"}, {"path", cfg.roc_source.path}};
  }
  j["threads"] = cfg.threads;
  j["fixed_truth_count"] = cfg.fixed_truth_count;
  j["out_dir"] = cfg.out_dir;
  j["write_records"] = cfg.write_records;
  return j;
}

}  // namespace qcluster

#endif
