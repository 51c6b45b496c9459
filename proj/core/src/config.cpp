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

#include "blobflow/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "blobflow/error.hpp"

namespace blobflow {
namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 9> kScenarioNames{{
    {Scenario::Heat1d, "heat1d"},
    {Scenario::Pme1d, "pme1d"},
    {Scenario::FpLinear, "fp-linear"},
    {Scenario::FpNonlinear, "fp-nonlinear"},
    {Scenario::Mks, "mks"},
    {Scenario::MksNl, "mks-nl"},
    {Scenario::CompactTent, "compact-tent"},
    {Scenario::Heat2d, "heat2d"},
    {Scenario::MksTwoBump, "mks-twobump"},
}};

[[noreturn]] void field_error(std::string_view key, const std::string& msg) {
  throw Error(ErrorCode::ConfigError, "field '" + std::string(key) + "': " + msg);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    field_error(key, "expected a real number, got '" + std::string(text) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
  text = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    field_error(key, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  field_error(key, "expected true or false, got '" + std::string(text) + "'");
}

bool is_auto(std::string_view text) { return trim(text) == "auto"; }

std::optional<double> parse_optional_real(std::string_view key, std::string_view text) {
  if (is_auto(text)) return std::nullopt;
  return parse_real(key, text);
}

std::string_view strip_brackets(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = trim(text.substr(1, text.size() - 2));
  }
  return text;
}

Interval parse_interval(std::string_view key, std::string_view text) {
  const auto parts = split(strip_brackets(text), ',');
  if (parts.size() != 2) field_error(key, "expected an interval lo,hi");
  return {parse_real(key, parts[0]), parse_real(key, parts[1])};
}

template <class T, class F>
std::vector<T> parse_list(std::string_view key, std::string_view text, F parse_one) {
  std::vector<T> out;
  const auto body = strip_brackets(text);
  if (body.empty()) return out;
  for (auto part : split(body, ',')) out.push_back(parse_one(key, part));
  return out;
}

// Shortest text that parses back to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string render(const std::optional<double>& v) {
  return v ? shortest(*v) : std::string("auto");
}

template <class T, class F>
std::string render_list(const std::vector<T>& xs, F fmt) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += fmt(xs[i]);
  }
  return s;
}

bool is_mks_family(Scenario s) {
  return s == Scenario::Mks || s == Scenario::MksNl || s == Scenario::MksTwoBump;
}

bool needs_m(Scenario s) {
  return s == Scenario::Pme1d || s == Scenario::FpNonlinear || s == Scenario::MksNl ||
         s == Scenario::CompactTent;
}

}  // namespace

std::string_view to_string(Scenario s) {
  for (const auto& [value, name] : kScenarioNames) {
    if (value == s) return name;
  }
  return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (const auto& [value, text] : kScenarioNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

std::string_view to_string(InitKind k) {
  switch (k) {
    case InitKind::Default: return "default";
    case InitKind::EqualWeights: return "equal-weights";
    case InitKind::EqualSpacing: return "equal-spacing";
  }
  return "unknown";
}

std::string_view to_string(StudyKind k) {
  switch (k) {
    case StudyKind::None: return "none";
    case StudyKind::Convergence: return "convergence";
    case StudyKind::Stabilization: return "stabilization";
    case StudyKind::Moment: return "moment";
  }
  return "unknown";
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "scenario", "N", "p", "dt", "cfl", "T", "chi", "m", "c", "t0",
      "init", "I_init", "end_weight", "adaptive", "delta", "dt_min", "confine",
      "snapshot_every", "snapshot_dt", "grid_extent", "study",
      "Ns", "Ts", "T_ref", "window", "out"};
  return keys;
}

void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "scenario") {
    const auto s = parse_scenario(value);
    if (!s) field_error(key, "unknown scenario '" + std::string(value) + "'");
    cfg.scenario = *s;
  } else if (key == "N") {
    cfg.N = parse_count(key, value);
  } else if (key == "p") {
    cfg.p = parse_real(key, value);
  } else if (key == "dt") {
    cfg.dt = parse_optional_real(key, value);
  } else if (key == "cfl") {
    cfg.cfl = parse_real(key, value);
  } else if (key == "T") {
    cfg.T = parse_real(key, value);
  } else if (key == "chi") {
    cfg.chi = parse_optional_real(key, value);
  } else if (key == "m") {
    cfg.m = parse_optional_real(key, value);
  } else if (key == "c") {
    cfg.c = parse_optional_real(key, value);
  } else if (key == "t0") {
    cfg.t0 = parse_optional_real(key, value);
  } else if (key == "init") {
    if (value == "default") cfg.init = InitKind::Default;
    else if (value == "equal-weights") cfg.init = InitKind::EqualWeights;
    else if (value == "equal-spacing") cfg.init = InitKind::EqualSpacing;
    else field_error(key, "expected default, equal-weights or equal-spacing");
  } else if (key == "I_init") {
    if (is_auto(value)) cfg.I_init.reset();
    else cfg.I_init = parse_interval(key, value);
  } else if (key == "end_weight") {
    cfg.end_weight = parse_optional_real(key, value);
  } else if (key == "adaptive") {
    if (is_auto(value)) cfg.adaptive.reset();
    else cfg.adaptive = parse_bool(key, value);
  } else if (key == "delta") {
    cfg.delta = parse_real(key, value);
  } else if (key == "dt_min") {
    cfg.dt_min = parse_real(key, value);
  } else if (key == "confine") {
    cfg.confine = parse_bool(key, value);
  } else if (key == "snapshot_every") {
    cfg.snapshot_every = parse_count(key, value);
  } else if (key == "snapshot_dt") {
    cfg.snapshot_dt = parse_real(key, value);
  } else if (key == "grid_extent") {
    cfg.grid_extent = parse_optional_real(key, value);
  } else if (key == "study") {
    if (value == "none") cfg.study = StudyKind::None;
    else if (value == "convergence") cfg.study = StudyKind::Convergence;
    else if (value == "stabilization") cfg.study = StudyKind::Stabilization;
    else if (value == "moment") cfg.study = StudyKind::Moment;
    else field_error(key, "expected none, convergence, stabilization or moment");
  } else if (key == "Ns") {
    cfg.Ns = parse_list<std::size_t>(key, value, parse_count);
  } else if (key == "Ts") {
    cfg.Ts = parse_list<double>(key, value, parse_real);
  } else if (key == "T_ref") {
    cfg.T_ref = parse_real(key, value);
  } else if (key == "window") {
    cfg.window = parse_real(key, value);
  } else if (key == "out") {
    if (value.empty()) field_error(key, "output directory must not be empty");
    cfg.out = std::string(value);
  } else {
    field_error(key, "unknown key");
  }
}

void apply_config_text(ScenarioConfig& cfg, std::string_view text, std::string_view source) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, where + "expected 'key = value'");
    }
    try {
      apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, where + e.what());
    }
  }
}

ScenarioConfig parse_config(std::string_view text, std::string_view source) {
  ScenarioConfig cfg;
  apply_config_text(cfg, text, source);
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

void ScenarioConfig::validate() const {
  if (N < 2) field_error("N", "at least two particles required");
  if (!(p > 0.0)) field_error("p", "must be positive");
  if (dt && !(*dt > 0.0)) field_error("dt", "must be positive or auto");
  if (!(cfl > 0.0)) field_error("cfl", "must be positive");
  if (!(T >= 0.0)) field_error("T", "must be non-negative");
  if (chi && !(*chi > 0.0)) field_error("chi", "must be positive");
  if (m && !(*m > 1.0)) field_error("m", "must exceed 1");
  if (c && !(*c > 0.0)) field_error("c", "must be positive");
  if (t0 && !(*t0 > 0.0)) field_error("t0", "must be positive");
  if (I_init && !(I_init->lo < I_init->hi)) field_error("I_init", "needs lo < hi");
  if (end_weight && !(*end_weight > 0.0 && *end_weight < 0.5)) {
    field_error("end_weight", "must lie in (0, 0.5)");
  }
  if (!(delta > 0.0 && delta < 1.0)) field_error("delta", "must lie in (0, 1)");
  if (!(dt_min > 0.0)) field_error("dt_min", "must be positive");
  if (snapshot_every > 0 && snapshot_dt > 0.0) {
    field_error("snapshot_dt", "cannot be combined with snapshot_every");
  }
  if (!(snapshot_dt >= 0.0)) field_error("snapshot_dt", "must be non-negative");
  if (grid_extent && !(*grid_extent > 0.0)) field_error("grid_extent", "must be positive");

  if (is_mks_family(scenario) && !chi) {
    field_error("chi", "scenario " + std::string(to_string(scenario)) + " requires chi");
  }
  if (needs_m(scenario) && !m) {
    field_error("m", "scenario " + std::string(to_string(scenario)) + " requires m");
  }
  if (scenario == Scenario::CompactTent && !c) {
    field_error("c", "scenario compact-tent requires c");
  }
  if (confine && !is_mks_family(scenario)) {
    field_error("confine", "only the mks family takes an extra confinement");
  }
  if (scenario == Scenario::Heat2d) {
    if (init != InitKind::Default) field_error("init", "heat2d always uses the grid");
    const auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(N))));
    if (side * side != N) field_error("N", "heat2d needs a square particle count");
    if (adaptive.value_or(false)) field_error("adaptive", "adaptive stepping is 1D only");
  }
  if (scenario == Scenario::MksTwoBump && init == InitKind::EqualWeights) {
    field_error("init", "the two-bump profile has no closed-form quantile");
  }

  switch (study) {
    case StudyKind::None:
      break;
    case StudyKind::Convergence:
      if (scenario != Scenario::Heat1d && scenario != Scenario::Pme1d) {
        field_error("study", "convergence needs heat1d or pme1d");
      }
      if (Ns.size() < 2) field_error("Ns", "a slope needs at least two values of N");
      for (auto n : Ns) {
        if (n < 2) field_error("Ns", "every N must be at least 2");
      }
      break;
    case StudyKind::Stabilization:
      if (scenario != Scenario::FpLinear && scenario != Scenario::FpNonlinear) {
        field_error("study", "stabilization needs fp-linear or fp-nonlinear");
      }
      if (Ts.size() < 2) field_error("Ts", "a slope needs at least two times");
      for (double t : Ts) {
        if (!(t > 0.0 && t < T_ref)) field_error("Ts", "times must lie in (0, T_ref)");
      }
      break;
    case StudyKind::Moment:
      if (scenario != Scenario::Mks) field_error("study", "moment study needs mks");
      if (!(window > 0.0)) field_error("window", "must be positive");
      break;
  }
}

std::vector<std::pair<std::string, std::string>> config_fields(const ScenarioConfig& cfg) {
  const auto count = [](std::size_t n) { return std::to_string(n); };
  const auto boolean = [](bool b) { return std::string(b ? "true" : "false"); };
  return {
      {"scenario", std::string(to_string(cfg.scenario))},
      {"N", count(cfg.N)},
      {"p", shortest(cfg.p)},
      {"dt", render(cfg.dt)},
      {"cfl", shortest(cfg.cfl)},
      {"T", shortest(cfg.T)},
      {"chi", render(cfg.chi)},
      {"m", render(cfg.m)},
      {"c", render(cfg.c)},
      {"t0", render(cfg.t0)},
      {"init", std::string(to_string(cfg.init))},
      {"I_init", cfg.I_init ? shortest(cfg.I_init->lo) + "," + shortest(cfg.I_init->hi)
                            : std::string("auto")},
      {"end_weight", render(cfg.end_weight)},
      {"adaptive", cfg.adaptive ? boolean(*cfg.adaptive) : std::string("auto")},
      {"delta", shortest(cfg.delta)},
      {"dt_min", shortest(cfg.dt_min)},
      {"confine", boolean(cfg.confine)},
      {"snapshot_every", count(cfg.snapshot_every)},
      {"snapshot_dt", shortest(cfg.snapshot_dt)},
      {"grid_extent", render(cfg.grid_extent)},
      {"study", std::string(to_string(cfg.study))},
      {"Ns", render_list(cfg.Ns, count)},
      {"Ts", render_list(cfg.Ts, [](double t) { return shortest(t); })},
      {"T_ref", shortest(cfg.T_ref)},
      {"window", shortest(cfg.window)},
      {"out", cfg.out},
  };
}

}  // namespace blobflow
