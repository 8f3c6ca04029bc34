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

#ifndef QCLUSTER_SIM_PIPELINE_HPP
#define QCLUSTER_SIM_PIPELINE_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcluster/channel/noise.hpp"
#include "qcluster/cluster/dbscan.hpp"
#include "qcluster/cluster/kmedoids.hpp"
#include "qcluster/cluster/points.hpp"
#include "qcluster/errors.hpp"
#include "qcluster/info/encoding.hpp"
#include "qcluster/info/entropy.hpp"
#include "qcluster/info/histogram.hpp"
#include "qcluster/probe/roc.hpp"
#include "qcluster/random.hpp"
#include "qcluster/scene/attractors.hpp"
#include "qcluster/scene/particles.hpp"
#include "qcluster/sim/config.hpp"
#include "qcluster/sim/io.hpp"
#include "qcluster/sim/parallel.hpp"

namespace qcluster {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kPrngId =
    "xoshiro256++ with splitmix64-derived substreams";

/// DBSCAN parameters of the particle scenario: neighborhood radius sqrt(2)
/// (8-connectivity on the pixel grid) and at least 4 points per
/// neighborhood, the point itself included.
inline constexpr double kDbscanEps = 1.4142135623730951;
inline constexpr int kDbscanMinPts = 4;

/// Substream roles. A sample's generation stages draw from independent
/// streams keyed by (master_seed, stream index, stage tag); a stage that has
/// to be retried re-derives its stream with the tag advanced by the retry
/// stride, so retries never reuse randomness.
namespace stage {
inline constexpr std::uint64_t kTruth = 0;
inline constexpr std::uint64_t kPattern = 1;
inline constexpr std::uint64_t kNoise = 2;
inline constexpr std::uint64_t kRetryStride = 16;
}  // namespace stage

namespace detail {

/// Stream index of sample i of histogram hist (histogram 0 is the main or
/// random-truth run; 1.. are the fixed-truth runs). The index deliberately
/// omits the sweep point and probe family, so experiments at different
/// error pairs share their randomness: error sets then nest along the sweep
/// and comparisons between families use common random numbers.
inline std::uint64_t sample_stream_index(int hist, std::uint64_t i) {
  return (static_cast<std::uint64_t>(hist) << 40) | i;
}

/// Stream index reserved for drawing fixed truth j; depends only on the
/// master seed, so every experiment of a sweep conditions on the same
/// truths.
inline std::uint64_t fixed_truth_stream_index(int j) {
  return (std::uint64_t{1} << 48) + static_cast<std::uint64_t>(j);
}

}  // namespace detail

/// One recorded sample: canonical codes of the ground truth A and the
/// estimate D.
struct SampleRecord {
  std::uint64_t sample_id = 0;
  std::uint64_t a = 0;
  std::uint64_t d = 0;
};

struct ExperimentResult {
  MiEstimate mi;
  std::vector<SampleRecord> records;
  std::uint64_t retries = 0;
};

struct SweepRow {
  double type1 = 0.0;
  double type2_classical = 0.0;
  double type2_quantum = 0.0;
  MiEstimate mi_classical;
  MiEstimate mi_quantum;
};

/// Test seam: when set, replaces the clustering stage with an arbitrary
/// function of the measurement (and the truth code, for identity stubs), so
/// estimator properties can be checked against known channels.
struct PipelineHooks {
  std::function<std::uint64_t(const ChannelPattern& measurement,
                              std::uint64_t truth_code)>
      estimate_override;
};

/// Clustering stage of the attractor scenario: a function of the
/// measurement result alone (the chain A -> B -> C -> D is Markov by
/// construction).
inline std::uint64_t attractor_estimate(const ChannelPattern& measurement,
                                        const GridSpec& grid) {
  return kmedoids_outcome_code(kmedoids(points_from_pattern(measurement), 2),
                               grid);
}

/// Clustering stage of the particle scenario, likewise a function of the
/// measurement result alone.
inline std::uint64_t particle_estimate(const ChannelPattern& measurement,
                                       int cap) {
  return static_cast<std::uint64_t>(count_clusters(
      dbscan(points_from_pattern(measurement), kDbscanEps, kDbscanMinPts),
      cap));
}

namespace detail {

inline SampleRecord run_attractor_sample(const ExperimentConfig& cfg,
                                         const ErrorPair& errors, int hist,
                                         std::uint64_t i,
                                         const AttractorTruth* fixed_truth,
                                         const ProbabilityMap* fixed_occ,
                                         const PipelineHooks* hooks) {
  const std::uint64_t idx = sample_stream_index(hist, i);
  AttractorTruth truth;
  ProbabilityMap local;
  const ProbabilityMap* occ = nullptr;
  if (fixed_truth != nullptr) {
    truth = *fixed_truth;
    occ = fixed_occ;
  } else {
    Xoshiro256pp rng_truth = seed_stream(cfg.master_seed, idx, stage::kTruth);
    truth = sample_attractor_truth(rng_truth, cfg.grid, cfg.attractor_params);
    local = attractor_occupancy(truth, cfg.grid, cfg.attractor_params);
    occ = &local;
  }
  Xoshiro256pp rng_pattern =
      seed_stream(cfg.master_seed, idx, stage::kPattern);
  const ChannelPattern pattern = sample_pattern_from_probs(rng_pattern, *occ);
  Xoshiro256pp rng_noise = seed_stream(cfg.master_seed, idx, stage::kNoise);
  const ChannelPattern measurement =
      apply_measurement_noise(rng_noise, pattern, errors);

  SampleRecord rec;
  rec.a = attractor_truth_code(truth, cfg.grid);
  rec.d = (hooks != nullptr && hooks->estimate_override)
              ? hooks->estimate_override(measurement, rec.a)
              : attractor_estimate(measurement, cfg.grid);
  return rec;
}

inline SampleRecord run_particle_sample(const ExperimentConfig& cfg,
                                        const ErrorPair& errors,
                                        std::uint64_t i, std::uint64_t n_per,
                                        std::atomic<std::uint64_t>* retries,
                                        const PipelineHooks* hooks) {
  const std::uint64_t idx = sample_stream_index(0, i);
  const int count = static_cast<int>(i / n_per);  // stratified ground truth
  ChannelPattern pattern(cfg.grid.side);
  for (std::uint64_t attempt = 0;; ++attempt) {
    if (attempt > 1000) {
      throw NumericError("particle placement failed 1000 times in a row; "
                         "the scene is effectively infeasible");
    }
    Xoshiro256pp rng_pattern = seed_stream(
        cfg.master_seed, idx, stage::kPattern + stage::kRetryStride * attempt);
    try {
      pattern = place_particles(rng_pattern, cfg.grid, ParticleTruth{count},
                                cfg.particle_params);
      break;
    } catch (const PlacementError&) {
      if (retries != nullptr) retries->fetch_add(1);
    }
  }
  Xoshiro256pp rng_noise = seed_stream(cfg.master_seed, idx, stage::kNoise);
  const ChannelPattern measurement =
      apply_measurement_noise(rng_noise, pattern, errors);

  SampleRecord rec;
  rec.a = static_cast<std::uint64_t>(count);
  rec.d = (hooks != nullptr && hooks->estimate_override)
              ? hooks->estimate_override(measurement, rec.a)
              : particle_estimate(measurement, cfg.particle_params.max_particles);
  return rec;
}

}  // namespace detail

/// Draws the fixed conditioning truths of the attractor scheme. They depend
/// only on (master_seed, index), never on the sweep point or probe family.
inline std::vector<AttractorTruth> fixed_attractor_truths(
    const ExperimentConfig& cfg) {
  std::vector<AttractorTruth> truths(cfg.fixed_truth_count);
  for (int j = 0; j < cfg.fixed_truth_count; ++j) {
    Xoshiro256pp rng = seed_stream(
        cfg.master_seed, detail::fixed_truth_stream_index(j), stage::kTruth);
    truths[j] = sample_attractor_truth(rng, cfg.grid, cfg.attractor_params);
  }
  return truths;
}

/// Runs one full Monte Carlo experiment at a fixed measurement error pair.
///
/// Particles: N samples stratified equally over the truth values, joint
/// plugin MI. Attractors: one run with a fresh random truth per sample (the
/// D histogram) plus fixed_truth_count runs at fixed truths (the
/// conditional histograms), combined by the fixed-A scheme.
///
/// Every sample writes only its preallocated record slot, and histograms
/// are accumulated from the records afterwards, so the result is invariant
/// under the thread count.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                       const ErrorPair& errors,
                                       const PipelineHooks* hooks = nullptr) {
  cfg.validate();
  errors.validate();
  ExperimentResult result;
  std::atomic<std::uint64_t> retries{0};

  if (cfg.scenario == Scenario::kParticles) {
    const std::uint64_t n = cfg.effective_samples();
    const std::uint64_t n_per =
        n / (static_cast<std::uint64_t>(cfg.particle_params.max_particles) + 1);
    result.records.resize(n);
    parallel_for(n, cfg.threads, [&](std::uint64_t i) {
      SampleRecord rec =
          detail::run_particle_sample(cfg, errors, i, n_per, &retries, hooks);
      rec.sample_id = i;
      result.records[i] = rec;
    });
    std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
    samples.reserve(result.records.size());
    for (const SampleRecord& r : result.records) {
      samples.emplace_back(r.a, r.d);
    }
    result.mi = mi_plugin(
        samples, static_cast<std::uint64_t>(cfg.particle_params.max_particles));
  } else {
    const std::uint64_t n = cfg.samples_per_point;
    const int k = cfg.fixed_truth_count;
    const std::vector<AttractorTruth> truths = fixed_attractor_truths(cfg);
    std::vector<ProbabilityMap> occs;
    occs.reserve(k);
    for (const AttractorTruth& t : truths) {
      occs.push_back(attractor_occupancy(t, cfg.grid, cfg.attractor_params));
    }
    const std::uint64_t total = static_cast<std::uint64_t>(k + 1) * n;
    result.records.resize(total);
    parallel_for(total, cfg.threads, [&](std::uint64_t g) {
      const int hist = static_cast<int>(g / n);
      const std::uint64_t i = g % n;
      SampleRecord rec = detail::run_attractor_sample(
          cfg, errors, hist, i, hist == 0 ? nullptr : &truths[hist - 1],
          hist == 0 ? nullptr : &occs[hist - 1], hooks);
      rec.sample_id = g;
      result.records[g] = rec;
    });
    CategoricalHistogram h_d;
    std::vector<CategoricalHistogram> conds(k);
    for (std::uint64_t g = 0; g < total; ++g) {
      const int hist = static_cast<int>(g / n);
      if (hist == 0) {
        h_d.add(result.records[g].d);
      } else {
        conds[hist - 1].add(result.records[g].d);
      }
    }
    result.mi = mi_fixed_a_scheme(h_d, conds);
  }
  result.retries = retries.load();
  return result;
}

inline void write_records_csv(const std::string& path,
                              const std::vector<SampleRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("cannot write records file " + path);
  out << "sample_id,a,d\n";
  for (const SampleRecord& r : records) {
    out << r.sample_id << ',' << r.a << ',' << r.d << '\n';
  }
}

inline std::vector<SampleRecord> load_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open records file " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError("records file " + path + " is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "sample_id,a,d") {
    throw ConfigError("records file " + path +
                      " must start with header sample_id,a,d");
  }
  std::vector<SampleRecord> records;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream split(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(split, cell, ',')) cells.push_back(cell);
    if (cells.size() != 3) {
      throw ConfigError("records file " + path + " has a malformed row");
    }
    SampleRecord rec;
    try {
      rec.sample_id = std::stoull(cells[0]);
      rec.a = std::stoull(cells[1]);
      rec.d = std::stoull(cells[2]);
    } catch (const std::exception&) {
      throw ConfigError("records file " + path + " has a non-integer cell");
    }
    records.push_back(rec);
  }
  return records;
}

namespace detail {

inline const char* kSweepHeader =
    "type1,type2_classical,type2_quantum,mi_classical,var_classical,"
    "mi_quantum,var_quantum";

inline std::string sweep_row_line(const SweepRow& row) {
  return fmt_g12(row.type1) + "," + fmt_g12(row.type2_classical) + "," +
         fmt_g12(row.type2_quantum) + "," + fmt_g12(row.mi_classical.value) +
         "," + fmt_g12(row.mi_classical.variance_bound) + "," +
         fmt_g12(row.mi_quantum.value) + "," +
         fmt_g12(row.mi_quantum.variance_bound);
}

/// Parses completed rows of an existing sweep.csv for crash-safe resume.
/// Returns the rows whose type1 cells match the leading config grid points;
/// anything inconsistent is a configuration error (stale outputs must be
/// removed explicitly, never silently overwritten).
inline std::vector<SweepRow> parse_existing_sweep(
    const std::filesystem::path& path, const std::vector<double>& grid) {
  std::vector<SweepRow> rows;
  std::ifstream in(path);
  if (!in) return rows;
  std::string line;
  if (!std::getline(in, line)) return rows;  // empty file: start fresh
  if (line != kSweepHeader) {
    throw ConfigError("existing " + path.string() +
                      " has a different header; remove it to start over");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream split(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(split, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) {
      throw ConfigError("existing " + path.string() +
                        " has a malformed row; remove it to start over");
    }
    if (rows.size() >= grid.size() ||
        cells[0] != fmt_g12(grid[rows.size()])) {
      throw ConfigError("existing " + path.string() +
                        " does not match the configured type1_grid; "
                        "remove it to start over");
    }
    SweepRow row;
    row.type1 = grid[rows.size()];
    row.type2_classical = std::stod(cells[1]);
    row.type2_quantum = std::stod(cells[2]);
    // Bias and method are not persisted in the CSV; resumed rows carry the
    // value and variance bound, which is what downstream consumers read.
    row.mi_classical.value = std::stod(cells[3]);
    row.mi_classical.variance_bound = std::stod(cells[4]);
    row.mi_quantum.value = std::stod(cells[5]);
    row.mi_quantum.variance_bound = std::stod(cells[6]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

/// Resolves the sweep's ROC curves from the configured source.
inline std::pair<RocCurve, RocCurve> sweep_roc_curves(
    const ExperimentConfig& cfg) {
  if (cfg.roc_source.kind == RocSourceKind::kComputed) {
    RocCurve classical = classical_roc_curve(cfg.probe, cfg.alpha_max(), 1001);
    RocCurve quantum = quantum_roc(cfg.probe, cfg.roc_source.a_grid,
                                   cfg.roc_source.b_grid, cfg.alpha_max());
    return {std::move(classical), std::move(quantum)};
  }
  return load_roc_csv(cfg.roc_source.path);
}

/// Sweeps the type-1 error grid: for each point, looks up both families'
/// type-2 errors on their ROC curves, runs one experiment per family, and
/// appends a CSV row. Rows are flushed as they complete, and an interrupted
/// sweep resumes after its last complete row. Writes sweep.csv, meta.json
/// and (optionally) per-row record files into cfg.out_dir.
inline std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  fs::create_directories(cfg.out_dir);
  const fs::path csv_path = fs::path(cfg.out_dir) / "sweep.csv";

  const auto [classical, quantum] = sweep_roc_curves(cfg);

  std::vector<SweepRow> rows =
      detail::parse_existing_sweep(csv_path, cfg.type1_grid);
  const bool fresh = rows.empty();
  std::ofstream out(csv_path, fresh ? std::ios::trunc : std::ios::app);
  if (!out) throw ConfigError("cannot write " + csv_path.string());
  if (fresh) out << detail::kSweepHeader << '\n' << std::flush;

  std::uint64_t retry_total = 0;
  for (std::size_t i = rows.size(); i < cfg.type1_grid.size(); ++i) {
    SweepRow row;
    row.type1 = cfg.type1_grid[i];
    row.type2_classical = roc_lookup(classical, row.type1);
    row.type2_quantum = roc_lookup(quantum, row.type1);
    const ExperimentResult rc =
        run_experiment(cfg, ErrorPair{row.type1, row.type2_classical});
    const ExperimentResult rq =
        run_experiment(cfg, ErrorPair{row.type1, row.type2_quantum});
    row.mi_classical = rc.mi;
    row.mi_quantum = rq.mi;
    retry_total += rc.retries + rq.retries;
    if (cfg.write_records) {
      const std::string tag = fmt_g12(row.type1);
      write_records_csv(
          (fs::path(cfg.out_dir) / ("records_" + tag + "_classical.csv"))
              .string(),
          rc.records);
      write_records_csv(
          (fs::path(cfg.out_dir) / ("records_" + tag + "_quantum.csv"))
              .string(),
          rq.records);
    }
    out << detail::sweep_row_line(row) << '\n' << std::flush;
    rows.push_back(row);
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  nlohmann::json meta;
  meta["config"] = config_to_json(cfg);
  meta["prng"] = kPrngId;
  meta["version"] = kVersion;
  meta["n_effective"] = cfg.effective_samples();
  meta["rows_completed"] = rows.size();
  meta["retry_total"] = retry_total;
  meta["wall_time_seconds"] = elapsed;
  std::ofstream meta_out(fs::path(cfg.out_dir) / "meta.json",
                         std::ios::trunc);
  if (!meta_out) throw ConfigError("cannot write meta.json");
  meta_out << meta.dump(2) << '\n';
  return rows;
}

}  // namespace qcluster

#endif
