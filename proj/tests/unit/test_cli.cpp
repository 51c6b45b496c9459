// Copyright 2026 The blobflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blobflow/config.hpp"
#include "blobflow/csv.hpp"
#include "blobflow/error.hpp"
#include "blobflow/scenario.hpp"
#include "blobflow/study.hpp"

namespace blobflow {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("blobflow_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

std::string config_error(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    return e.what();
  }
  ADD_FAILURE() << "expected a ConfigError";
  return {};
}

TEST(Config, ParsesFlatText) {
  const auto cfg = parse_config(
      "# comment\n"
      "scenario = mks\n"
      "N = 80   # trailing comment\n"
      "chi=1.5\n"
      "\n"
      "I_init = [-3, 3]\n"
      "Ns = 10,20,40\n"
      "dt = auto\n");
  EXPECT_EQ(cfg.scenario, Scenario::Mks);
  EXPECT_EQ(cfg.N, 80u);
  EXPECT_EQ(*cfg.chi, 1.5);
  EXPECT_EQ(cfg.I_init->lo, -3.0);
  EXPECT_EQ(cfg.Ns, (std::vector<std::size_t>{10, 20, 40}));
  EXPECT_FALSE(cfg.dt.has_value());
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, FlagsOverrideFile) {
  auto cfg = parse_config("scenario = heat1d\nN = 30\n");
  apply_setting(cfg, "N", "60");
  EXPECT_EQ(cfg.N, 60u);
}

TEST(Config, Diagnostics) {
  EXPECT_NE(config_error([] { parse_config("scenario = heat3d\n"); }).find("field 'scenario'"),
            std::string::npos);
  EXPECT_NE(config_error([] { parse_config("N = 10\n\nT = soon\n", "run.cfg"); })
                .find("run.cfg:3:"),
            std::string::npos);
  EXPECT_NE(config_error([] { parse_config("bogus = 1\n"); }).find("unknown key"),
            std::string::npos);
  EXPECT_NE(config_error([] { parse_config("just words\n"); }).find("key = value"),
            std::string::npos);
}

TEST(Config, ScenarioRequirements) {
  auto cfg = parse_config("scenario = mks\n");
  EXPECT_NE(config_error([&] { cfg.validate(); }).find("field 'chi'"), std::string::npos);
  cfg = parse_config("scenario = pme1d\n");
  EXPECT_NE(config_error([&] { cfg.validate(); }).find("field 'm'"), std::string::npos);
  cfg = parse_config("scenario = compact-tent\nm = 3\n");
  EXPECT_NE(config_error([&] { cfg.validate(); }).find("field 'c'"), std::string::npos);
  cfg = parse_config("scenario = heat2d\nN = 50\n");
  EXPECT_NE(config_error([&] { cfg.validate(); }).find("field 'N'"), std::string::npos);
  cfg = parse_config("scenario = heat1d\nstudy = convergence\nNs = 10\n");
  EXPECT_NE(config_error([&] { cfg.validate(); }).find("field 'Ns'"), std::string::npos);
}

TEST(Config, FieldsCoverEveryKey) {
  const auto fields = config_fields(ScenarioConfig{});
  ASSERT_EQ(fields.size(), config_keys().size());
  for (std::size_t k = 0; k < fields.size(); ++k) EXPECT_EQ(fields[k].first, config_keys()[k]);
  // Rendering and re-applying every field reproduces the config.
  ScenarioConfig cfg = parse_config("scenario = mks-nl\nchi = 1.4\nm = 2\nTs = 1,2\n");
  ScenarioConfig copy;
  for (const auto& [key, value] : config_fields(cfg)) apply_setting(copy, key, value);
  EXPECT_EQ(config_fields(copy), config_fields(cfg));
}

TEST(Csv, RealsRoundTrip) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int k = 0; k < 1000; ++k) {
    const double v = std::exp(u(rng)) * (k % 2 ? 1 : -1);
    const std::string s = format_real(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, v) << s;
  }
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
}

TEST(Csv, Headers) {
  std::ostringstream m, e, s1, s2;
  write_metrics_csv(m, MetricSeries{});
  EXPECT_EQ(m.str(), "t,energy_total,energy_internal,energy_confine,energy_interact,m2,entropy\n");
  write_errors_csv(e, std::vector<double>{10}, std::vector<double>{0.25});
  EXPECT_EQ(e.str(), "N_or_T,error\n10,0.25\n");
  const std::vector<Snapshot> one{{0.0, ParticleSystem::build_1d({0.0, 1.0}, {1, 1})}};
  write_snapshots_csv(s1, one, 10.0, BallConvention::Auto);
  EXPECT_EQ(s1.str().substr(0, s1.str().find('\n')), "t,i,x,w,ball");
  const std::vector<Snapshot> two{{0.0, ParticleSystem::build(2, {0, 0, 1, 1}, {1, 1})}};
  write_snapshots_csv(s2, two, 10.0, BallConvention::Auto);
  EXPECT_EQ(s2.str().substr(0, s2.str().find('\n')), "t,i,x,y,w,ball");
}

TEST(RunScenario, HeatWritesFilesAndEnergyDescends) {
  TempDir dir;
  auto cfg = parse_config("scenario = heat1d\nN = 50\ndt = 1e-5\nT = 1\n");
  cfg.out = dir.path().string();
  const auto outcome = run_scenario(cfg);
  EXPECT_EQ(outcome.exit_code, 0);
  EXPECT_EQ(first_line(dir.path() / "snapshots.csv"), "t,i,x,w,ball");

  std::ifstream in(dir.path() / "metrics.csv");
  std::string line;
  std::getline(in, line);
  double prev = 1e300;
  int rows = 0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const double e = std::stod(line.substr(c1 + 1));
    EXPECT_LT(e, prev);
    prev = e;
    ++rows;
  }
  EXPECT_EQ(rows, 11);

  const auto manifest = nlohmann::json::parse(slurp(dir.path() / "manifest.json"));
  EXPECT_EQ(manifest["version"], version_string());
  for (const auto& key : config_keys()) EXPECT_TRUE(manifest["config"].contains(key)) << key;
  EXPECT_EQ(manifest["stop"]["reason"], "ReachedFinalTime");
}

TEST(RunScenario, KellerSegelReportsBlowUp) {
  TempDir dir;
  auto cfg = parse_config("scenario = mks\nchi = 1.5\nN = 50\nT = 5\n");
  cfg.out = dir.path().string();
  const auto outcome = run_scenario(cfg);
  EXPECT_EQ(outcome.exit_code, 2);
  const auto manifest = nlohmann::json::parse(slurp(dir.path() / "manifest.json"));
  EXPECT_EQ(manifest["stop"]["reason"], "BlowUp");
  const double t_star = manifest["stop"]["time"];
  EXPECT_GT(t_star, 0.0);
  EXPECT_LT(t_star, 5.0);
}

TEST(RunScenario, Deterministic) {
  TempDir a, b;
  auto cfg = parse_config("scenario = compact-tent\nm = 3\nc = 8\nN = 20\nT = 0.05\n");
  cfg.out = a.path().string();
  run_scenario(cfg);
  cfg.out = b.path().string();
  run_scenario(cfg);
  for (const char* f : {"snapshots.csv", "metrics.csv"}) {
    EXPECT_EQ(slurp(a.path() / f), slurp(b.path() / f)) << f;
  }
}

TEST(RunScenario, EveryScenarioBuilds) {
  const char* configs[] = {
      "scenario = heat1d",
      "scenario = pme1d\nm = 2",
      "scenario = fp-linear",
      "scenario = fp-nonlinear\nm = 2",
      "scenario = mks\nchi = 1.5",
      "scenario = mks-nl\nchi = 1.4\nm = 2",
      "scenario = compact-tent\nm = 3\nc = 8",
      "scenario = heat2d\nN = 100",
      "scenario = mks-twobump\nchi = 1.5",
  };
  for (const char* text : configs) {
    const auto setup = build_scenario(parse_config(text));
    EXPECT_GE(setup.initial.size(), 2u) << text;
  }
  const auto tent = build_scenario(parse_config(configs[6]));
  EXPECT_LT(tent.initial.weight(0), 0.002);
}

TEST(Study, ConvergenceTableAndManifest) {
  TempDir dir;
  auto cfg = parse_config("scenario = heat1d\nstudy = convergence\nNs = 10,20\nT = 0.05\n");
  cfg.out = dir.path().string();
  EXPECT_EQ(run_study(cfg), 0);
  EXPECT_EQ(first_line(dir.path() / "errors.csv"), "N_or_T,error");
  const auto manifest = nlohmann::json::parse(slurp(dir.path() / "manifest.json"));
  EXPECT_LT(manifest["slope"].get<double>(), 0.0);
}

TEST(Study, StabilizationDecays) {
  auto cfg = parse_config(
      "scenario = fp-linear\nstudy = stabilization\nN = 20\nTs = 0.5,1\nT_ref = 2\n");
  const auto r = study_stabilization(cfg);
  ASSERT_EQ(r.errors.size(), 2u);
  EXPECT_LT(r.errors[1], r.errors[0]);
}

TEST(Study, MomentSlope) {
  auto cfg = parse_config("scenario = mks\nchi = 0.5\nN = 20\nstudy = moment\nwindow = 0.01\n");
  const auto r = study_moment(cfg);
  EXPECT_NEAR(r.slope, r.predicted, 1e-3 * std::abs(r.predicted));
}

}  // namespace
}  // namespace blobflow
