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

#include <sys/wait.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "qcluster/qcluster.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed command-line binary with the given arguments and
// captures its exit code and both output streams.
CliResult run_cli(const std::string& args) {
  static int call = 0;
  const fs::path base =
      fs::temp_directory_path() / ("qcluster_cli_" + std::to_string(call++));
  const fs::path out_path = base.string() + ".out";
  const fs::path err_path = base.string() + ".err";
  const std::string cmd = std::string(QCLUSTER_CLI_PATH) + " " + args + " >" +
                          out_path.string() + " 2>" + err_path.string();
  const int raw = std::system(cmd.c_str());
  CliResult result;
  if (WIFEXITED(raw)) result.code = WEXITSTATUS(raw);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  fs::remove(out_path);
  fs::remove(err_path);
  return result;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path, std::ios::trunc);
  out << content;
  return path;
}

TEST_CASE("roc subcommand writes the two-curve CSV", "[cli]") {
  const fs::path out = fs::temp_directory_path() / "qcluster_cli_roc.csv";
  const CliResult r = run_cli("roc --a-grid 32 --b-grid 32 --points 11 --out " +
                              out.string());
  REQUIRE(r.code == 0);
  const std::vector<std::string> lines = split_lines(slurp(out));
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "alpha,beta_classical,beta_quantum");
  // First row is the zero-false-alarm point; its classical miss rate is the
  // squared probe fidelity.
  std::istringstream first(lines[1]);
  std::string alpha, beta_c, beta_q;
  std::getline(first, alpha, ',');
  std::getline(first, beta_c, ',');
  std::getline(first, beta_q, ',');
  CHECK(alpha == "0");
  CHECK(std::stod(beta_c) == Catch::Approx(0.39182592948537676).margin(1e-9));
  CHECK(std::stod(beta_q) < std::stod(beta_c));
  CHECK(lines.back().substr(0, 5) == "0.05,");
  fs::remove(out);
}

TEST_CASE("roc subcommand rejects invalid channel parameters", "[cli]") {
  CHECK(run_cli("roc --tau0 1.5").code == 2);
  CHECK(run_cli("roc --mean-photons -1").code == 2);
}

TEST_CASE("cluster subcommand labels a rectangle as one cluster", "[cli]") {
  std::ostringstream grid;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const bool on = r >= 2 && r <= 3 && c >= 1 && c <= 5;
      grid << (on ? '1' : '0');
    }
    grid << '\n';
  }
  const fs::path pattern =
      write_temp("qcluster_cli_pattern.txt", grid.str());

  const CliResult db = run_cli("cluster --algo dbscan " + pattern.string());
  REQUIRE(db.code == 0);
  const std::vector<std::string> db_lines = split_lines(db.out);
  REQUIRE(db_lines.size() == 11);
  CHECK(db_lines[0] == "r,c,label");
  for (std::size_t i = 1; i < db_lines.size(); ++i) {
    CHECK(db_lines[i].substr(db_lines[i].rfind(',') + 1) == "1");
  }
  CHECK(db.err.find("clusters: 1") != std::string::npos);

  const CliResult km =
      run_cli("cluster --algo kmedoids --k 1 " + pattern.string());
  REQUIRE(km.code == 0);
  const std::vector<std::string> km_lines = split_lines(km.out);
  REQUIRE(km_lines.size() == 11);
  for (std::size_t i = 1; i < km_lines.size(); ++i) {
    CHECK(km_lines[i].substr(km_lines[i].rfind(',') + 1) == "1");
  }
  fs::remove(pattern);

  CHECK(run_cli("cluster --algo dbscan /nonexistent/pattern.txt").code == 2);
  CHECK(run_cli("cluster --algo voronoi " + pattern.string()).code == 2);
}

TEST_CASE("mi subcommand matches the in-process estimators", "[cli]") {
  // Joint scheme: an identity channel over four equally likely truths
  // carries exactly two bits.
  std::vector<qcluster::SampleRecord> records;
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (int i = 0; i < 10; ++i) {
      records.push_back({records.size(), a, a});
    }
  }
  const fs::path joint = fs::temp_directory_path() / "qcluster_cli_joint.csv";
  qcluster::write_records_csv(joint.string(), records);

  const CliResult r = run_cli("mi " + joint.string());
  REQUIRE(r.code == 0);
  const nlohmann::json got = nlohmann::json::parse(r.out);
  CHECK(got.at("method") == "joint-plugin");
  CHECK(got.at("value").get<double>() == Catch::Approx(2.0).margin(1e-12));

  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
  for (const auto& rec : records) samples.emplace_back(rec.a, rec.d);
  const qcluster::MiEstimate want = qcluster::mi_plugin(samples, 3);
  CHECK(got.at("value").get<double>() ==
        Catch::Approx(want.value).margin(1e-15));
  CHECK(got.at("bias").get<double>() ==
        Catch::Approx(want.bias).margin(1e-15));
  CHECK(got.at("variance_bound").get<double>() ==
        Catch::Approx(want.variance_bound).margin(1e-15));
  fs::remove(joint);
}

TEST_CASE("mi subcommand combines conditional record files", "[cli]") {
  // Marginal run: 20 samples each of three outcomes. Conditional runs of the
  // same length: constant outcomes, so the conditional entropies are all
  // zero.
  std::vector<qcluster::SampleRecord> marginal;
  std::vector<fs::path> cond_paths;
  for (std::uint64_t d = 0; d < 3; ++d) {
    std::vector<qcluster::SampleRecord> cond;
    for (int i = 0; i < 60; ++i) {
      if (i < 20) marginal.push_back({marginal.size(), 0, d});
      cond.push_back({static_cast<std::uint64_t>(i), d, d});
    }
    const fs::path path = fs::temp_directory_path() /
                          ("qcluster_cli_cond" + std::to_string(d) + ".csv");
    qcluster::write_records_csv(path.string(), cond);
    cond_paths.push_back(path);
  }
  const fs::path marg_path =
      fs::temp_directory_path() / "qcluster_cli_marginal.csv";
  qcluster::write_records_csv(marg_path.string(), marginal);

  std::string args = "mi --scheme fixed-a " + marg_path.string();
  for (const fs::path& p : cond_paths) {
    args += " --conditional " + p.string();
  }
  const CliResult r = run_cli(args);
  REQUIRE(r.code == 0);
  const nlohmann::json got = nlohmann::json::parse(r.out);
  CHECK(got.at("method") == "fixed-a");
  CHECK(got.at("value").get<double>() ==
        Catch::Approx(1.584962500721156).margin(1e-12));
  CHECK(got.at("variance_bound").get<double>() == 0.0);
  CHECK(got.at("bias").get<double>() == 0.0);

  // Scheme/flag mismatches and bad inputs are usage errors.
  CHECK(run_cli("mi --scheme fixed-a " + marg_path.string()).code == 2);
  CHECK(run_cli("mi --scheme joint --conditional " + cond_paths[0].string() +
                " " + marg_path.string())
            .code == 2);
  CHECK(run_cli("mi /nonexistent/records.csv").code == 2);
  const fs::path bad =
      write_temp("qcluster_cli_bad.csv", "wrong,header,here\n1,2,3\n");
  CHECK(run_cli("mi " + bad.string()).code == 2);
  fs::remove(bad);
  fs::remove(marg_path);
  for (const fs::path& p : cond_paths) fs::remove(p);
}

TEST_CASE("simulate subcommand reports one experiment as JSON", "[cli]") {
  const fs::path records =
      fs::temp_directory_path() / "qcluster_cli_sim_records.csv";
  const CliResult r = run_cli(
      "simulate --scenario particles --type1 0 --type2 0.1 --samples 44 "
      "--seed 3 --threads 1 --records " +
      records.string());
  REQUIRE(r.code == 0);
  const nlohmann::json got = nlohmann::json::parse(r.out);
  CHECK(got.at("scenario") == "particles");
  CHECK(got.at("family") == "classical");
  CHECK(got.at("type1").get<double>() == 0.0);
  CHECK(got.at("type2").get<double>() == 0.1);
  CHECK(got.at("n_effective") == 44);
  CHECK(got.at("mi").at("value").get<double>() >= 0.0);
  CHECK(qcluster::load_records_csv(records.string()).size() == 44);
  fs::remove(records);
}

TEST_CASE("simulate subcommand derives the classical operating point",
          "[cli]") {
  const CliResult r = run_cli(
      "simulate --scenario particles --type1 0 --samples 22 --seed 3 "
      "--threads 1");
  REQUIRE(r.code == 0);
  const nlohmann::json got = nlohmann::json::parse(r.out);
  CHECK(got.at("type2").get<double>() ==
        Catch::Approx(0.39182592948537676).margin(1e-12));

  const CliResult q = run_cli(
      "simulate --scenario particles --type1 0.01 --family quantum "
      "--type2 0.14 --samples 22 --seed 4 --threads 1");
  REQUIRE(q.code == 0);
  const nlohmann::json qgot = nlohmann::json::parse(q.out);
  CHECK(qgot.at("family") == "quantum");
  CHECK(qgot.at("type2").get<double>() == 0.14);
}

TEST_CASE("simulate subcommand needs a scenario source", "[cli]") {
  CHECK(run_cli("simulate --type1 0").code == 2);
  CHECK(run_cli("simulate --scenario particles --type1 1.5").code == 2);
}

TEST_CASE("sweep subcommand runs a config end to end", "[cli]") {
  const fs::path dir_a = fs::temp_directory_path() / "qcluster_cli_sweep_a";
  const fs::path dir_b = fs::temp_directory_path() / "qcluster_cli_sweep_b";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
  const nlohmann::json cfg = {
      {"scenario", "particles"},
      {"grid_side", 12},
      {"particle_params", {{"max_particles", 3}}},
      {"type1_grid", {0.0, 0.04}},
      {"samples_per_point", 40},
      {"master_seed", 5},
      {"roc_source", {{"kind", "computed"}, {"a_grid", 24}, {"b_grid", 24}}},
      {"threads", 1},
      {"out_dir", dir_a.string()},
  };
  const fs::path cfg_path = write_temp("qcluster_cli_sweep.json", cfg.dump(2));

  const CliResult r = run_cli("sweep --config " + cfg_path.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.find("wrote 2 rows") != std::string::npos);
  const std::string csv = slurp(dir_a / "sweep.csv");
  REQUIRE(split_lines(csv).size() == 3);

  const CliResult r4 = run_cli("sweep --config " + cfg_path.string() +
                               " --out-dir " + dir_b.string() +
                               " --threads 4");
  REQUIRE(r4.code == 0);
  CHECK(slurp(dir_b / "sweep.csv") == csv);

  nlohmann::json bad = cfg;
  bad["bogus"] = 1;
  const fs::path bad_path =
      write_temp("qcluster_cli_sweep_bad.json", bad.dump(2));
  CHECK(run_cli("sweep --config " + bad_path.string()).code == 2);
  CHECK(run_cli("sweep --config /nonexistent/config.json").code == 2);

  fs::remove(cfg_path);
  fs::remove(bad_path);
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
}

TEST_CASE("usage errors exit with status two", "[cli]") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("roc --help").code == 0);
}

}  // namespace
