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

#include "blobflow/study.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blobflow/csv.hpp"
#include "blobflow/error.hpp"
#include "blobflow/metrics.hpp"
#include "blobflow/scenario.hpp"
#include "manifest.hpp"

namespace blobflow {
namespace {

// Error studies start from a wider interval so the initial tails carry
// negligible mass.
constexpr Interval kGaussianStudyInterval{-4.0, 4.0};

void require_completed(const SimResult& res, const std::string& what) {
  if (res.stop.kind != StopKind::ReachedFinalTime) {
    throw Error(ErrorCode::DomainError, what + " stopped early: " +
                                            to_string(res.stop.kind) + " at t = " +
                                            format_real(res.stop.time));
  }
}

ScenarioConfig study_defaults(ScenarioConfig cfg) {
  if (!cfg.I_init && (cfg.scenario == Scenario::Heat1d || cfg.scenario == Scenario::FpLinear)) {
    cfg.I_init = kGaussianStudyInterval;
  }
  cfg.snapshot_every = 0;
  cfg.snapshot_dt = 0.0;
  cfg.adaptive = false;
  return cfg;
}

std::vector<double> logs(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double x) { return std::log(x); });
  return out;
}

}  // namespace

ConvergenceResult study_convergence(const ScenarioConfig& base) {
  base.validate();
  if (base.study != StudyKind::Convergence) {
    throw Error(ErrorCode::ConfigError, "field 'study': expected convergence");
  }
  ConvergenceResult out;
  for (std::size_t n : base.Ns) {
    auto cfg = study_defaults(base);
    cfg.N = n;
    cfg.study = StudyKind::None;
    auto setup = build_scenario(cfg);
    setup.control.snapshots = {};
    const auto res = run(setup.initial, setup.spec, setup.control);
    require_completed(res, "run with N = " + std::to_string(n));
    out.Ns.push_back(static_cast<double>(n));
    out.errors.push_back(
        wasserstein_error(res.snapshots.back().system, *setup.reference, cfg.T));
  }
  out.slope = fit_slope(logs(out.Ns), logs(out.errors));
  return out;
}

StabilizationResult study_stabilization(const ScenarioConfig& base) {
  base.validate();
  if (base.study != StudyKind::Stabilization) {
    throw Error(ErrorCode::ConfigError, "field 'study': expected stabilization");
  }
  auto cfg = study_defaults(base);
  cfg.study = StudyKind::None;
  cfg.T = cfg.T_ref;
  const auto setup = build_scenario(cfg);

  auto times = base.Ts;
  std::sort(times.begin(), times.end());
  times.push_back(cfg.T_ref);

  // One trajectory, cut into segments that end on each requested time.
  std::vector<ParticleSystem> states;
  ParticleSystem state = setup.initial;
  double t = 0.0;
  for (double target : times) {
    StepControl control = setup.control;
    control.snapshots = {};
    control.final_time = target - t;
    const auto res = run(state, setup.spec, control);
    require_completed(res, "stabilization segment ending at T = " + format_real(target));
    state = res.snapshots.back().system;
    states.push_back(state);
    t = target;
  }

  StabilizationResult out;
  out.Ts.assign(times.begin(), times.end() - 1);
  for (std::size_t k = 0; k + 1 < states.size(); ++k) {
    out.errors.push_back(discrete_error(states[k], states.back()));
  }
  out.slope = fit_slope(out.Ts, logs(out.errors));
  return out;
}

MomentResult study_moment(const ScenarioConfig& base) {
  base.validate();
  if (base.study != StudyKind::Moment) {
    throw Error(ErrorCode::ConfigError, "field 'study': expected moment");
  }
  auto cfg = base;
  cfg.study = StudyKind::None;
  cfg.adaptive = false;
  cfg.T = base.window;
  cfg.snapshot_every = 1;
  cfg.snapshot_dt = 0.0;
  // Equal weights make the discrete moment identity exact.
  if (cfg.init == InitKind::Default) cfg.init = InitKind::EqualWeights;
  const auto setup = build_scenario(cfg);
  const auto res = run(setup.initial, setup.spec, setup.control);
  require_completed(res, "moment run");

  MomentResult out;
  out.times = res.metrics.times;
  out.m2 = res.metrics.second_moment;
  out.slope = fit_slope(out.times, out.m2);
  out.predicted = predicted_moment_slope(cfg.N, *cfg.chi);
  return out;
}

int run_study(const ScenarioConfig& cfg, std::vector<std::filesystem::path>* files) {
  const std::filesystem::path dir(cfg.out);
  std::filesystem::create_directories(dir);
  auto manifest = detail::manifest_base(cfg);
  std::ostringstream table;
  std::string table_name = "errors.csv";

  switch (cfg.study) {
    case StudyKind::Convergence: {
      const auto r = study_convergence(cfg);
      write_errors_csv(table, r.Ns, r.errors);
      manifest["slope"] = r.slope;
      break;
    }
    case StudyKind::Stabilization: {
      const auto r = study_stabilization(cfg);
      write_errors_csv(table, r.Ts, r.errors);
      manifest["slope"] = r.slope;
      break;
    }
    case StudyKind::Moment: {
      const auto r = study_moment(cfg);
      table << "t,m2\n";
      for (std::size_t k = 0; k < r.times.size(); ++k) {
        table << format_real(r.times[k]) << ',' << format_real(r.m2[k]) << '\n';
      }
      table_name = "moment.csv";
      manifest["slope"] = r.slope;
      manifest["predicted_slope"] = r.predicted;
      manifest["relative_deviation"] = std::abs(r.slope - r.predicted) / std::abs(r.predicted);
      break;
    }
    case StudyKind::None:
      throw Error(ErrorCode::ConfigError, "field 'study': no study selected");
  }

  write_file_atomic(dir / table_name, table.str());
  manifest["files"] = {table_name, "manifest.json"};
  detail::write_manifest(dir / "manifest.json", manifest);
  if (files) *files = {dir / table_name, dir / "manifest.json"};
  return 0;
}

}  // namespace blobflow
