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

// Command-line front end: runs one scenario or one study and writes CSV
// output plus a JSON manifest.
//
//   blobflow --scenario heat1d --N 50 --T 1 --out runs/heat
//   blobflow --config mks.cfg --chi 1.5
//   blobflow --scenario heat1d --study convergence --set Ns=10,20,40,80 --T 0.5

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "blobflow/config.hpp"
#include "blobflow/csv.hpp"
#include "blobflow/error.hpp"
#include "blobflow/scenario.hpp"
#include "blobflow/study.hpp"

namespace {

struct Flag {
  const char* key;
  const char* help;
  std::optional<std::string> value;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blob-particle solver for Wasserstein gradient flows"};
  app.set_version_flag("--version", blobflow::version_string());

  std::string config_path;
  app.add_option("--config", config_path, "flat key = value config file");

  std::vector<Flag> flags{
      {"scenario", "heat1d, pme1d, fp-linear, fp-nonlinear, mks, mks-nl, "
                   "compact-tent, heat2d or mks-twobump", {}},
      {"N", "number of particles", {}},
      {"dt", "time step, or 'auto' for cfl/N^2", {}},
      {"T", "final time", {}},
      {"p", "softmin exponent", {}},
      {"chi", "log-attraction strength", {}},
      {"m", "power-law diffusion exponent", {}},
      {"c", "tent-potential height", {}},
      {"out", "output directory", {}},
      {"study", "none, convergence, stabilization or moment", {}},
  };
  for (auto& f : flags) {
    app.add_option(std::string("--") + f.key, f.value, f.help);
  }

  std::vector<std::string> settings;
  app.add_option("--set", settings, "extra key=value setting (repeatable)");
  bool show_config = false;
  app.add_flag("--show-config", show_config, "print the resolved config and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    blobflow::ScenarioConfig cfg;
    if (!config_path.empty()) cfg = blobflow::load_config_file(config_path);
    for (const auto& s : settings) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) {
        throw blobflow::Error(blobflow::ErrorCode::ConfigError,
                              "--set expects key=value, got '" + s + "'");
      }
      blobflow::apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
    for (const auto& f : flags) {
      if (f.value) blobflow::apply_setting(cfg, f.key, *f.value);
    }
    cfg.validate();

    if (show_config) {
      for (const auto& [key, value] : blobflow::config_fields(cfg)) {
        std::cout << key << " = " << value << '\n';
      }
      return 0;
    }

    if (cfg.study != blobflow::StudyKind::None) {
      std::vector<std::filesystem::path> files;
      const int code = blobflow::run_study(cfg, &files);
      for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
      return code;
    }

    const auto outcome = blobflow::run_scenario(cfg);
    const auto& stop = outcome.result.stop;
    std::cout << "stop: " << blobflow::to_string(stop.kind) << " at t = "
              << blobflow::format_real(stop.time) << " after " << outcome.result.steps
              << " steps\n";
    for (const auto& f : outcome.files) std::cout << "wrote " << f.string() << '\n';
    return outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
