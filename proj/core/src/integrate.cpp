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

#include "blobflow/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "blobflow/energy.hpp"
#include "blobflow/error.hpp"
#include "blobflow/softmin.hpp"

namespace blobflow {
namespace {

// A step that would end within this fraction of a step of the next target
// time is stretched (or shortened) to land on it.
constexpr double kLandingSlack = 1e-9;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

bool is_step_error(const Error& e) {
  return e.code() == ErrorCode::OrderingViolated ||
         e.code() == ErrorCode::CoincidentParticles;
}

class Driver {
 public:
  Driver(const ParticleSystem& initial, const EnergySpec& spec,
         const StepControl& control, std::optional<AdaptiveStep> adaptive,
         double dt)
      : sys_(initial), spec_(spec), control_(control), adaptive_(adaptive), dt_(dt) {}

  SimResult run() {
    const double final_time = control_.final_time;
    const auto& policy = control_.snapshots;
    result_.min_separation = sys_.min_separation();
    record();

    std::size_t snap_index = 1;
    const auto next_snap_time = [&] {
      return policy.every_time > 0.0 ? static_cast<double>(snap_index) * policy.every_time
                                     : std::numeric_limits<double>::infinity();
    };

    while (t_ < final_time) {
      std::vector<double> grad;
      try {
        grad = weighted_gradient(sys_, spec_);
      } catch (const Error& e) {
        if (!is_step_error(e)) throw;
        stop(StopKind::OrderingViolated, e.what());
        break;
      }
      if (adaptive_) {
        shrink_step(grad);
        if (dt_ < adaptive_->dt_min) {
          stop(StopKind::BlowUp, "adaptive step fell below dt_min");
          break;
        }
      }

      const double snap_time = next_snap_time();
      const double target = std::min(final_time, snap_time);
      double dt = dt_;
      bool landing = false;
      if (target - t_ <= dt_ * (1.0 + kLandingSlack)) {
        dt = target - t_;
        landing = true;
      }

      std::vector<double> next(sys_.coords().begin(), sys_.coords().end());
      for (std::size_t k = 0; k < next.size(); ++k) next[k] -= dt * grad[k];
      try {
        sys_ = sys_.with_positions(std::move(next));
      } catch (const Error& e) {
        if (!is_step_error(e)) throw;
        stop(StopKind::OrderingViolated, e.what());
        break;
      }

      ++result_.steps;
      result_.step_sizes.push_back(dt_);
      t_ = landing ? target : t_ + dt;
      result_.min_separation = std::min(result_.min_separation, sys_.min_separation());

      bool take = policy.every_steps > 0 && result_.steps % policy.every_steps == 0;
      if (landing && target == snap_time) {
        take = true;
        ++snap_index;
      }
      if (t_ >= final_time) take = true;
      if (take) record();
    }

    result_.last_dt = dt_;
    if (!stopped_) {
      result_.stop = {StopKind::ReachedFinalTime, t_, ""};
    }
    if (result_.snapshots.back().t != t_) record();
    return std::move(result_);
  }

 private:
  // Lower the step to delta * r_i / |v_i| wherever that bound is tighter.
  void shrink_step(const std::vector<double>& grad) {
    for (std::size_t i = 0; i < sys_.size(); ++i) {
      const double speed = std::abs(grad[i]);
      if (speed == 0.0) continue;
      const double r = softmin_pair(sys_.gap(i), sys_.gap(i + 1), spec_.p);
      const double bound = adaptive_->delta * r / speed;
      if (!(dt_ <= bound)) dt_ = bound;
    }
  }

  void record() {
    result_.snapshots.push_back({t_, sys_});
    result_.metrics.append(t_, sys_, spec_);
  }

  void stop(StopKind kind, std::string detail) {
    stopped_ = true;
    result_.stop = {kind, t_, std::move(detail)};
  }

  ParticleSystem sys_;
  const EnergySpec& spec_;
  const StepControl& control_;
  std::optional<AdaptiveStep> adaptive_;
  double dt_;
  double t_ = 0.0;
  bool stopped_ = false;
  SimResult result_;
};

}  // namespace

std::string to_string(StopKind kind) {
  switch (kind) {
    case StopKind::ReachedFinalTime: return "ReachedFinalTime";
    case StopKind::BlowUp: return "BlowUp";
    case StopKind::OrderingViolated: return "OrderingViolated";
  }
  return "Unknown";
}

void StepControl::validate() const {
  require(std::isfinite(final_time) && final_time >= 0.0,
          "final time must be a non-negative real");
  if (const auto* f = std::get_if<FixedStep>(&mode)) {
    require(std::isfinite(f->dt) && f->dt > 0.0, "time step must be positive");
  } else {
    const auto& a = std::get<AdaptiveStep>(mode);
    require(a.delta > 0.0 && a.delta < 1.0, "adaptive delta must lie in (0, 1)");
    require(a.dt_min > 0.0 && a.dt_min < a.dt_init && std::isfinite(a.dt_init),
            "adaptive control needs 0 < dt_min < dt_init");
  }
  require(snapshots.every_steps == 0 || snapshots.every_time == 0.0,
          "choose either a step or a time snapshot cadence");
  require(std::isfinite(snapshots.every_time) && snapshots.every_time >= 0.0,
          "snapshot interval must be non-negative");
}

ParticleSystem step_explicit(const ParticleSystem& sys, const EnergySpec& spec,
                             double dt) {
  require(std::isfinite(dt) && dt > 0.0, "time step must be positive");
  const auto grad = weighted_gradient(sys, spec);
  std::vector<double> next(sys.coords().begin(), sys.coords().end());
  for (std::size_t k = 0; k < next.size(); ++k) next[k] -= dt * grad[k];
  return sys.with_positions(std::move(next));
}

SimResult run_fixed(const ParticleSystem& initial, const EnergySpec& spec,
                    const StepControl& control) {
  control.validate();
  spec.validate();
  const auto* fixed = std::get_if<FixedStep>(&control.mode);
  require(fixed != nullptr, "run_fixed needs a fixed step control");
  if (!fixed->override_cfl) {
    const double limit = cfl_suggestion(initial.size(), 0.1);
    require(fixed->dt <= limit * (1.0 + 1e-12),
            "time step exceeds 0.1/N^2; set override_cfl to force it");
  }
  return Driver(initial, spec, control, std::nullopt, fixed->dt).run();
}

SimResult run_adaptive(const ParticleSystem& initial, const EnergySpec& spec,
                       const StepControl& control) {
  control.validate();
  spec.validate();
  const auto* adaptive = std::get_if<AdaptiveStep>(&control.mode);
  require(adaptive != nullptr, "run_adaptive needs an adaptive step control");
  require(initial.dim() == 1, "adaptive stepping is defined for 1D systems");
  return Driver(initial, spec, control, *adaptive, adaptive->dt_init).run();
}

SimResult run(const ParticleSystem& initial, const EnergySpec& spec,
              const StepControl& control) {
  if (std::holds_alternative<FixedStep>(control.mode)) {
    return run_fixed(initial, spec, control);
  }
  return run_adaptive(initial, spec, control);
}

double cfl_suggestion(std::size_t n, double c) {
  require(n >= 2, "N must be at least 2");
  require(std::isfinite(c) && c > 0.0, "CFL constant must be positive");
  const double dn = static_cast<double>(n);
  return c / (dn * dn);
}

}  // namespace blobflow
