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
#include <vector>

#include "blobflow/config.hpp"

namespace blobflow {

struct ConvergenceResult {
  std::vector<double> Ns;
  std::vector<double> errors;
  double slope = 0.0;  // of log e against log N
};

struct StabilizationResult {
  std::vector<double> Ts;
  std::vector<double> errors;
  double slope = 0.0;  // of log e against T
};

struct MomentResult {
  std::vector<double> times;
  std::vector<double> m2;
  double slope = 0.0;
  double predicted = 0.0;
};

ConvergenceResult study_convergence(const ScenarioConfig& cfg);
StabilizationResult study_stabilization(const ScenarioConfig& cfg);
MomentResult study_moment(const ScenarioConfig& cfg);

// Runs cfg.study and writes errors.csv (or metrics.csv for the moment study)
// plus manifest.json under cfg.out. Returns the process exit code.
int run_study(const ScenarioConfig& cfg, std::vector<std::filesystem::path>* files = nullptr);

}  // namespace blobflow
