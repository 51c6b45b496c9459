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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blobflow/init.hpp"

namespace blobflow {

enum class Scenario {
  Heat1d,
  Pme1d,
  FpLinear,
  FpNonlinear,
  Mks,
  MksNl,
  CompactTent,
  Heat2d,
  MksTwoBump,
};

std::string_view to_string(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);

enum class InitKind { Default, EqualWeights, EqualSpacing };
enum class StudyKind { None, Convergence, Stabilization, Moment };

std::string_view to_string(InitKind k);
std::string_view to_string(StudyKind k);

// Every field has a flat config key of the same name (see config_keys()).
struct ScenarioConfig {
  Scenario scenario = Scenario::Heat1d;
  std::size_t N = 50;
  double p = 10.0;
  std::optional<double> dt;  // empty means auto: cfl / N^2
  double cfl = 0.1;
  double T = 1.0;
  std::optional<double> chi;
  std::optional<double> m;
  std::optional<double> c;
  std::optional<double> t0;
  InitKind init = InitKind::Default;
  std::optional<Interval> I_init;
  std::optional<double> end_weight;
  std::optional<bool> adaptive;  // empty means the scenario default
  double delta = 0.25;
  double dt_min = 1e-7;
  bool confine = false;          // adds V = |x|^2 / 2 to the mks family
  std::size_t snapshot_every = 0;
  double snapshot_dt = 0.0;      // both zero: ten evenly spaced snapshots
  std::optional<double> grid_extent;
  StudyKind study = StudyKind::None;
  std::vector<std::size_t> Ns;
  std::vector<double> Ts;
  double T_ref = 6.0;
  double window = 0.1;
  std::string out = "out";

  // Throws Error(ConfigError) naming the offending field.
  void validate() const;
};

const std::vector<std::string>& config_keys();

// Throws Error(ConfigError) with "field '<key>': ..." on a bad key or value.
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value);

// Flat "key = value" text; '#' starts a comment. Diagnostics carry
// "<source>:<line>:".
ScenarioConfig parse_config(std::string_view text, std::string_view source = "<config>");
void apply_config_text(ScenarioConfig& cfg, std::string_view text,
                       std::string_view source = "<config>");
ScenarioConfig load_config_file(const std::string& path);

// Every field as key/value text, in config_keys() order. Unset optionals
// are rendered as "auto".
std::vector<std::pair<std::string, std::string>> config_fields(const ScenarioConfig& cfg);

}  // namespace blobflow
