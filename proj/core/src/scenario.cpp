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

#include "blobflow/scenario.hpp"

#include <cmath>
#include <sstream>

#include "blobflow/csv.hpp"
#include "blobflow/energy.hpp"
#include "blobflow/error.hpp"
#include "manifest.hpp"

namespace blobflow {
namespace {

constexpr double kDefaultT0 = 0.25;
constexpr double kHeat2dT0 = 0.125;
constexpr double kTentEndWeight = 0.001;
constexpr double kAdaptiveDtInit = 1e-5;

bool default_adaptive(Scenario s) {
  return s == Scenario::Mks || s == Scenario::MksTwoBump;
}

// Half-width of the Barenblatt support at t0.
double barenblatt_edge(double m, double t0) {
  const auto bc = barenblatt_constants(m);
  return std::pow(t0, bc.alpha) * std::sqrt(bc.K / bc.kappa);
}

ProfileSpec profile_for(const ScenarioConfig& cfg) {
  const double t0 = scenario_t0(cfg);
  switch (cfg.scenario) {
    case Scenario::Pme1d:
    case Scenario::FpNonlinear:
      return BarenblattProfile{*cfg.m, t0};
    case Scenario::CompactTent:
      return Uniform{-2.0, 2.0};
    case Scenario::Heat2d:
      return Gaussian2D{t0};
    case Scenario::MksTwoBump:
      return TwoBump{t0, 2.0};
    default:
      return GaussianHeat{t0};
  }
}

EnergySpec spec_for(const ScenarioConfig& cfg) {
  EnergySpec spec;
  spec.p = cfg.p;
  switch (cfg.scenario) {
    case Scenario::Heat1d:
    case Scenario::Heat2d:
      spec.internal = Entropy{};
      break;
    case Scenario::Pme1d:
      spec.internal = PowerLaw{*cfg.m};
      break;
    case Scenario::FpLinear:
      spec.internal = Entropy{};
      spec.confinement = QuadraticConfinement{1.0};
      break;
    case Scenario::FpNonlinear:
      spec.internal = PowerLaw{*cfg.m};
      spec.confinement = QuadraticConfinement{1.0};
      break;
    case Scenario::Mks:
    case Scenario::MksTwoBump:
      spec.internal = Entropy{};
      spec.interaction = LogAttraction{*cfg.chi};
      break;
    case Scenario::MksNl:
      spec.internal = PowerLaw{*cfg.m};
      spec.interaction = LogAttraction{*cfg.chi};
      break;
    case Scenario::CompactTent:
      spec.internal = PowerLaw{*cfg.m};
      spec.interaction = CompactTent{*cfg.c};
      break;
  }
  if (cfg.confine) spec.confinement = QuadraticConfinement{1.0};
  return spec;
}

std::optional<ReferenceSolution> reference_for(const ScenarioConfig& cfg) {
  const double t0 = scenario_t0(cfg);
  switch (cfg.scenario) {
    case Scenario::Heat1d: return ReferenceSolution::heat(t0);
    case Scenario::Pme1d: return ReferenceSolution::barenblatt(*cfg.m, t0);
    case Scenario::FpLinear: return ReferenceSolution::fp_linear_steady();
    case Scenario::FpNonlinear: return ReferenceSolution::fp_nonlinear_steady(*cfg.m);
    default: return std::nullopt;
  }
}

ParticleSystem initial_for(const ScenarioConfig& cfg, const ProfileSpec& profile) {
  if (const auto* g = std::get_if<Gaussian2D>(&profile)) {
    const auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(cfg.N))));
    // The grid spans four standard deviations of each coordinate.
    const double extent = cfg.grid_extent.value_or(4.0 * std::sqrt(2.0 * g->t0));
    return init_grid_2d(*g, side, extent);
  }
  if (cfg.init == InitKind::EqualWeights) return init_equal_weights(profile, cfg.N);
  std::optional<double> end_weight = cfg.end_weight;
  if (!end_weight && cfg.scenario == Scenario::CompactTent) end_weight = kTentEndWeight;
  return init_equal_spacing(profile, cfg.N, cfg.I_init.value_or(default_interval(cfg)),
                            end_weight);
}

StepControl control_for(const ScenarioConfig& cfg) {
  StepControl control;
  control.final_time = cfg.T;
  if (cfg.adaptive.value_or(default_adaptive(cfg.scenario))) {
    control.mode = AdaptiveStep{cfg.delta, cfg.dt.value_or(kAdaptiveDtInit), cfg.dt_min};
  } else {
    const double dt = cfg.dt.value_or(cfl_suggestion(cfg.N, cfg.cfl));
    control.mode = FixedStep{dt, cfg.dt.has_value()};
  }
  control.snapshots.every_steps = cfg.snapshot_every;
  control.snapshots.every_time = cfg.snapshot_dt;
  if (cfg.snapshot_every == 0 && cfg.snapshot_dt == 0.0 && cfg.T > 0.0) {
    control.snapshots.every_time = cfg.T / 10.0;
  }
  return control;
}

}  // namespace

namespace detail {

nlohmann::json manifest_base(const ScenarioConfig& cfg) {
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [key, value] : config_fields(cfg)) config[key] = value;
  return {{"version", version_string()}, {"config", config}};
}

void write_manifest(const std::filesystem::path& path, const nlohmann::json& manifest) {
  write_file_atomic(path, manifest.dump(2) + "\n");
}

}  // namespace detail

std::string version_string() { return BLOBFLOW_VERSION_STRING; }

double scenario_t0(const ScenarioConfig& cfg) {
  if (cfg.t0) return *cfg.t0;
  return cfg.scenario == Scenario::Heat2d ? kHeat2dT0 : kDefaultT0;
}

Interval default_interval(const ScenarioConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::Pme1d:
    case Scenario::FpNonlinear: {
      const double k0 = barenblatt_edge(*cfg.m, scenario_t0(cfg));
      return {-k0, k0};
    }
    case Scenario::CompactTent: return {-2.0, 2.0};
    case Scenario::MksTwoBump: return {-4.5, 4.5};
    default: return {-2.5, 2.5};
  }
}

ScenarioSetup build_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  auto profile = profile_for(cfg);
  auto initial = initial_for(cfg, profile);
  return {std::move(initial), spec_for(cfg), control_for(cfg), profile, reference_for(cfg)};
}

double velocity_norm(const ParticleSystem& sys, const EnergySpec& spec) {
  const auto grad = weighted_gradient(sys, spec);
  const auto d = static_cast<std::size_t>(sys.dim());
  double sum = 0.0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) sum += sys.weight(i) * grad[i * d + k] * grad[i * d + k];
  }
  return std::sqrt(sum);
}

int exit_code(StopKind kind) {
  switch (kind) {
    case StopKind::ReachedFinalTime: return 0;
    case StopKind::BlowUp: return 2;
    case StopKind::OrderingViolated: return 1;
  }
  return 1;
}

RunOutcome run_scenario(const ScenarioConfig& cfg) {
  const auto setup = build_scenario(cfg);
  RunOutcome outcome;
  outcome.result = run(setup.initial, setup.spec, setup.control);
  const auto& res = outcome.result;
  outcome.exit_code = exit_code(res.stop.kind);

  const std::filesystem::path dir(cfg.out);
  std::filesystem::create_directories(dir);

  std::ostringstream snaps;
  write_snapshots_csv(snaps, res.snapshots, setup.spec.p, setup.spec.balls);
  write_file_atomic(dir / "snapshots.csv", snaps.str());

  std::ostringstream metrics;
  write_metrics_csv(metrics, res.metrics);
  write_file_atomic(dir / "metrics.csv", metrics.str());

  auto manifest = detail::manifest_base(cfg);
  manifest["energy"] = describe(setup.spec);
  manifest["stop"] = {{"reason", to_string(res.stop.kind)},
                      {"time", res.stop.time},
                      {"detail", res.stop.detail}};
  manifest["steps"] = res.steps;
  manifest["min_separation"] = res.min_separation;
  try {
    manifest["final_velocity_norm"] = velocity_norm(res.snapshots.back().system, setup.spec);
  } catch (const Error&) {
    manifest["final_velocity_norm"] = nullptr;
  }
  manifest["files"] = {"snapshots.csv", "metrics.csv", "manifest.json"};
  detail::write_manifest(dir / "manifest.json", manifest);

  outcome.files = {dir / "snapshots.csv", dir / "metrics.csv", dir / "manifest.json"};
  return outcome;
}

}  // namespace blobflow
