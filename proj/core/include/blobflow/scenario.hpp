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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "blobflow/config.hpp"
#include "blobflow/energy_spec.hpp"
#include "blobflow/init.hpp"
#include "blobflow/integrate.hpp"
#include "blobflow/reference.hpp"

namespace blobflow {

// Everything a single run needs, resolved from a config and the preset table.
struct ScenarioSetup {
  ParticleSystem initial;
  EnergySpec spec;
  StepControl control;
  ProfileSpec profile;
  std::optional<ReferenceSolution> reference;
};

double scenario_t0(const ScenarioConfig& cfg);
Interval default_interval(const ScenarioConfig& cfg);

ScenarioSetup build_scenario(const ScenarioConfig& cfg);

// Weighted norm (sum_i w_i |v_i|^2)^(1/2) of the particle velocity.
double velocity_norm(const ParticleSystem& sys, const EnergySpec& spec);

int exit_code(StopKind kind);

struct RunOutcome {
  SimResult result;
  int exit_code = 0;
  std::vector<std::filesystem::path> files;
};

// Writes snapshots.csv, metrics.csv and manifest.json under cfg.out.
RunOutcome run_scenario(const ScenarioConfig& cfg);

std::string version_string();

}  // namespace blobflow
