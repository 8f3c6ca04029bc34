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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcluster/qcluster.hpp"

namespace {

const char* mi_method_name(qcluster::MiMethod method) {
  return method == qcluster::MiMethod::kJointPlugin ? "joint-plugin"
                                                    : "fixed-a";
}

nlohmann::json mi_to_json(const qcluster::MiEstimate& est) {
  return {{"value", est.value},
          {"bias", est.bias},
          {"variance_bound", est.variance_bound},
          {"method", mi_method_name(est.method)}};
}

qcluster::CategoricalHistogram estimate_histogram(
    const std::vector<qcluster::SampleRecord>& records) {
  qcluster::CategoricalHistogram h;
  for (const qcluster::SampleRecord& r : records) h.add(r.d);
  return h;
}

// Type-2 error of the requested probe family at the requested type-1 error.
double family_type2(const qcluster::ExperimentConfig& cfg,
                    const std::string& family, double type1) {
  if (family == "classical") {
    const double f = qcluster::classical_fidelity(cfg.probe);
    return type1 >= f * f ? 0.0 : qcluster::classical_beta(type1, f);
  }
  qcluster::RocCurve quantum;
  if (cfg.roc_source.kind == qcluster::RocSourceKind::kFile) {
    quantum = qcluster::load_roc_csv(cfg.roc_source.path).second;
  } else {
    quantum = qcluster::quantum_roc(cfg.probe, cfg.roc_source.a_grid,
                                    cfg.roc_source.b_grid, cfg.alpha_max());
  }
  return qcluster::roc_lookup(quantum, type1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulations of cluster detection with quantum-enhanced "
               "channel probing"};
  app.require_subcommand(1);
  std::function<int()> action;

  // --- roc ---------------------------------------------------------------
  struct {
    double tau0 = 0.95;
    double tau1 = 0.4;
    double mean_photons = 8.0;
    double alpha_max = 0.05;
    int a_grid = 512;
    int b_grid = 512;
    int points = 101;
    std::string out;
  } roc_opt;
  CLI::App* roc = app.add_subcommand(
      "roc", "Compute the classical and quantum ROC curves as CSV");
  roc->add_option("--tau0", roc_opt.tau0, "No-cluster transmissivity")
      ->capture_default_str();
  roc->add_option("--tau1", roc_opt.tau1, "Cluster transmissivity")
      ->capture_default_str();
  roc->add_option("--mean-photons", roc_opt.mean_photons,
                  "Mean probe photon number")
      ->capture_default_str();
  roc->add_option("--alpha-max", roc_opt.alpha_max,
                  "Upper end of the type-1 error range")
      ->capture_default_str();
  roc->add_option("--a-grid", roc_opt.a_grid,
                  "Preparation-weight grid size for the quantum curve")
      ->capture_default_str();
  roc->add_option("--b-grid", roc_opt.b_grid,
                  "Measurement-weight grid size for the quantum curve")
      ->capture_default_str();
  roc->add_option("--points", roc_opt.points, "Number of output rows")
      ->capture_default_str();
  roc->add_option("--out", roc_opt.out, "Output path (default: stdout)");
  roc->callback([&] {
    action = [&]() -> int {
      qcluster::LossChannelPair pair{roc_opt.tau0, roc_opt.tau1,
                                     roc_opt.mean_photons};
      pair.validate();
      const qcluster::RocCurve classical =
          qcluster::classical_roc_curve(pair, roc_opt.alpha_max, 1001);
      const qcluster::RocCurve quantum = qcluster::quantum_roc(
          pair, roc_opt.a_grid, roc_opt.b_grid, roc_opt.alpha_max);
      if (roc_opt.out.empty()) {
        qcluster::write_roc_csv(std::cout, classical, quantum,
                                roc_opt.alpha_max, roc_opt.points);
      } else {
        std::ofstream out(roc_opt.out, std::ios::trunc);
        if (!out) {
          throw qcluster::ConfigError("cannot write " + roc_opt.out);
        }
        qcluster::write_roc_csv(out, classical, quantum, roc_opt.alpha_max,
                                roc_opt.points);
      }
      return 0;
    };
  });

  // --- simulate ----------------------------------------------------------
  struct {
    std::string scenario;
    std::string family = "classical";
    double type1 = 0.0;
    double type2 = 0.0;
    std::string config_path;
    std::string records_path;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int threads = -1;
  } sim_opt;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Run one Monte Carlo experiment and print its MI estimate");
  sim->add_option("--scenario", sim_opt.scenario, "Scene model")
      ->check(CLI::IsMember({"attractors", "particles"}));
  sim->add_option("--type1", sim_opt.type1, "Per-pixel type-1 error")
      ->check(CLI::Range(0.0, 1.0))
      ->required();
  sim->add_option("--family", sim_opt.family, "Probe family")
      ->check(CLI::IsMember({"classical", "quantum"}))
      ->capture_default_str();
  CLI::Option* type2_opt =
      sim->add_option("--type2", sim_opt.type2,
                      "Per-pixel type-2 error (default: from the family's "
                      "ROC curve)")
          ->check(CLI::Range(0.0, 1.0));
  sim->add_option("--config", sim_opt.config_path,
                  "Config file supplying grid, probe and sampling settings");
  sim->add_option("--records", sim_opt.records_path,
                  "Write per-sample (a, d) records to this CSV");
  CLI::Option* samples_opt = sim->add_option(
      "--samples", sim_opt.samples, "Override samples per experiment");
  CLI::Option* seed_opt =
      sim->add_option("--seed", sim_opt.seed, "Override master seed");
  sim->add_option("--threads", sim_opt.threads,
                  "Worker threads (0 = all cores)");
  sim->callback([&] {
    action = [&]() -> int {
      qcluster::ExperimentConfig cfg;
      if (!sim_opt.config_path.empty()) {
        cfg = qcluster::load_config(sim_opt.config_path);
      } else if (sim_opt.scenario.empty()) {
        throw qcluster::ConfigError(
            "simulate needs --scenario or a --config file");
      }
      if (!sim_opt.scenario.empty()) {
        cfg.scenario = sim_opt.scenario == "attractors"
                           ? qcluster::Scenario::kAttractors
                           : qcluster::Scenario::kParticles;
      }
      if (samples_opt->count() > 0) cfg.samples_per_point = sim_opt.samples;
      if (seed_opt->count() > 0) cfg.master_seed = sim_opt.seed;
      if (sim_opt.threads >= 0) cfg.threads = sim_opt.threads;
      cfg.type1_grid = {sim_opt.type1};
      cfg.validate();

      const double type2 = type2_opt->count() > 0
                               ? sim_opt.type2
                               : family_type2(cfg, sim_opt.family,
                                              sim_opt.type1);
      const qcluster::ExperimentResult result = qcluster::run_experiment(
          cfg, qcluster::ErrorPair{sim_opt.type1, type2});
      if (!sim_opt.records_path.empty()) {
        qcluster::write_records_csv(sim_opt.records_path, result.records);
      }
      nlohmann::json out;
      out["scenario"] = cfg.scenario == qcluster::Scenario::kAttractors
                            ? "attractors"
                            : "particles";
      out["family"] = sim_opt.family;
      out["type1"] = sim_opt.type1;
      out["type2"] = type2;
      out["n_effective"] = cfg.effective_samples();
      out["retries"] = result.retries;
      out["mi"] = mi_to_json(result.mi);
      std::cout << out.dump(2) << '\n';
      return 0;
    };
  });

  // --- sweep -------------------------------------------------------------
  struct {
    std::string config_path;
    std::string out_dir;
    int threads = -1;
  } sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep the type-1 error grid of a config file");
  sweep->add_option("--config", sweep_opt.config_path, "Config file")
      ->required();
  sweep->add_option("--out-dir", sweep_opt.out_dir,
                    "Override the config's output directory");
  sweep->add_option("--threads", sweep_opt.threads,
                    "Worker threads (0 = all cores)");
  sweep->callback([&] {
    action = [&]() -> int {
      qcluster::ExperimentConfig cfg =
          qcluster::load_config(sweep_opt.config_path);
      if (!sweep_opt.out_dir.empty()) cfg.out_dir = sweep_opt.out_dir;
      if (sweep_opt.threads >= 0) cfg.threads = sweep_opt.threads;
      const std::vector<qcluster::SweepRow> rows = qcluster::run_sweep(cfg);
      std::cout << "wrote " << rows.size() << " rows to "
                << (std::filesystem::path(cfg.out_dir) / "sweep.csv").string()
                << '\n';
      return 0;
    };
  });

  // --- mi ----------------------------------------------------------------
  struct {
    std::string input;
    std::string scheme = "joint";
    std::uint64_t max_a = 0;
    std::vector<std::string> conditionals;
  } mi_opt;
  CLI::App* mi = app.add_subcommand(
      "mi", "Estimate mutual information from a records CSV");
  mi->add_option("input", mi_opt.input, "Records CSV with sample_id,a,d rows")
      ->required();
  mi->add_option("--scheme", mi_opt.scheme, "Estimation scheme")
      ->check(CLI::IsMember({"joint", "fixed-a"}))
      ->capture_default_str();
  CLI::Option* max_a_opt = mi->add_option(
      "--max-a", mi_opt.max_a,
      "Largest truth value (default: largest a in the input)");
  mi->add_option("--conditional", mi_opt.conditionals,
                 "Records CSV of one fixed-truth run (repeatable; "
                 "fixed-a scheme only)");
  mi->callback([&] {
    action = [&]() -> int {
      const std::vector<qcluster::SampleRecord> records =
          qcluster::load_records_csv(mi_opt.input);
      qcluster::MiEstimate est;
      if (mi_opt.scheme == "joint") {
        if (!mi_opt.conditionals.empty()) {
          throw qcluster::ConfigError(
              "--conditional only applies to --scheme fixed-a");
        }
        if (records.empty()) {
          throw qcluster::DomainError("records file has no rows");
        }
        std::uint64_t max_a = 0;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
        samples.reserve(records.size());
        for (const qcluster::SampleRecord& r : records) {
          samples.emplace_back(r.a, r.d);
          max_a = std::max(max_a, r.a);
        }
        if (max_a_opt->count() > 0) max_a = mi_opt.max_a;
        est = qcluster::mi_plugin(samples, max_a);
      } else {
        if (max_a_opt->count() > 0) {
          throw qcluster::ConfigError(
              "--max-a only applies to --scheme joint");
        }
        if (mi_opt.conditionals.empty()) {
          throw qcluster::ConfigError(
              "--scheme fixed-a needs at least one --conditional file");
        }
        std::vector<qcluster::CategoricalHistogram> conds;
        conds.reserve(mi_opt.conditionals.size());
        for (const std::string& path : mi_opt.conditionals) {
          conds.push_back(
              estimate_histogram(qcluster::load_records_csv(path)));
        }
        est = qcluster::mi_fixed_a_scheme(estimate_histogram(records), conds);
      }
      std::cout << mi_to_json(est).dump(2) << '\n';
      return 0;
    };
  });

  // --- cluster -----------------------------------------------------------
  struct {
    std::string algo;
    std::string input;
    int k = 2;
    double eps = qcluster::kDbscanEps;
    int min_pts = qcluster::kDbscanMinPts;
    int cap = 10;
  } cl_opt;
  CLI::App* cluster = app.add_subcommand(
      "cluster", "Label the foreground points of a 0/1 grid file");
  cluster->add_option("--algo", cl_opt.algo, "Clustering algorithm")
      ->check(CLI::IsMember({"kmedoids", "dbscan"}))
      ->required();
  cluster->add_option("input", cl_opt.input, "Text file of 0/1 rows")
      ->required();
  cluster->add_option("--k", cl_opt.k, "Number of medoids (kmedoids)")
      ->capture_default_str();
  cluster->add_option("--eps", cl_opt.eps, "Neighborhood radius (dbscan)")
      ->capture_default_str();
  cluster->add_option("--min-pts", cl_opt.min_pts,
                      "Minimum neighborhood size (dbscan)")
      ->capture_default_str();
  cluster->add_option("--cap", cl_opt.cap, "Cluster-count cap (dbscan)")
      ->capture_default_str();
  cluster->callback([&] {
    action = [&]() -> int {
      const qcluster::ChannelPattern pattern =
          qcluster::load_pattern_text(cl_opt.input);
      const qcluster::PointSet points =
          qcluster::points_from_pattern(pattern);
      std::cout << "r,c,label\n";
      if (cl_opt.algo == "kmedoids") {
        const qcluster::KMedoidsResult result =
            qcluster::kmedoids(points, cl_opt.k);
        for (const auto& p : points.points) {
          int best = 0;
          std::int64_t best_d2 = -1;
          for (std::size_t m = 0; m < result.medoids.size(); ++m) {
            const std::int64_t d2 =
                qcluster::squared_distance(p, result.medoids[m]);
            if (best_d2 < 0 || d2 < best_d2) {
              best_d2 = d2;
              best = static_cast<int>(m) + 1;
            }
          }
          std::cout << p.first << ',' << p.second << ',' << best << '\n';
        }
        std::cerr << "clusters: " << result.medoids.size()
                  << (result.degenerate ? " (degenerate: fewer points than "
                                          "medoids requested)"
                                        : "")
                  << '\n';
      } else {
        const qcluster::DbscanResult result =
            qcluster::dbscan(points, cl_opt.eps, cl_opt.min_pts);
        for (std::size_t i = 0; i < points.points.size(); ++i) {
          std::cout << points.points[i].first << ','
                    << points.points[i].second << ',' << result.labels[i]
                    << '\n';
        }
        std::cerr << "clusters: "
                  << qcluster::count_clusters(result, cl_opt.cap) << '\n';
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 0;
  } catch (const qcluster::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 3;
  } catch (const qcluster::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qcluster::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qcluster::PlacementError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qcluster::InsufficientSamplesError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
