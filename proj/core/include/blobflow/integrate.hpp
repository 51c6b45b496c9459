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
#include <string>
#include <variant>
#include <vector>

#include "blobflow/energy_spec.hpp"
#include "blobflow/metrics.hpp"
#include "blobflow/particles.hpp"

namespace blobflow {

struct FixedStep {
  double dt = 1e-5;
  // Accept dt above cfl_suggestion(N, 0.1).
  bool override_cfl = false;
};

// Step-size control for collapse detection: every step the size is lowered
// to delta * r_i / |v_i| wherever that is smaller (r_i the softmin ball
// length, v_i the velocity) and never raised again. The run stops with
// BlowUp once the size falls below dt_min. One dimension only.
struct AdaptiveStep {
  double delta = 0.25;
  double dt_init = 1e-5;
  double dt_min = 1e-7;
};

// Snapshot cadence. At most one of the two may be set; with neither, only the
// initial and final states are kept. Time-based snapshots shorten the step
// that would overshoot them.
struct SnapshotPolicy {
  std::size_t every_steps = 0;
  double every_time = 0.0;
};

struct StepControl {
  std::variant<FixedStep, AdaptiveStep> mode = FixedStep{};
  double final_time = 1.0;
  SnapshotPolicy snapshots{};

  void validate() const;
};

enum class StopKind { ReachedFinalTime, BlowUp, OrderingViolated };

struct StopReason {
  StopKind kind = StopKind::ReachedFinalTime;
  double time = 0.0;
  std::string detail;
};

std::string to_string(StopKind kind);

struct Snapshot {
  double t;
  ParticleSystem system;
};

struct SimResult {
  std::vector<Snapshot> snapshots;
  MetricSeries metrics;  // one entry per snapshot
  StopReason stop;
  std::size_t steps = 0;
  // Step size in force after each step's update (adaptive: the renewed
  // size before any shortening to hit a snapshot; fixed: dt).
  std::vector<double> step_sizes;
  double last_dt = 0.0;  // step size in force when the run ended
  // Smallest inter-particle distance seen over the run.
  double min_separation = 0.0;
};

// Explicit Euler step x_i <- x_i - dt (grad_w E)_i. Weights are untouched.
// Throws OrderingViolated (1D) or CoincidentParticles.
ParticleSystem step_explicit(const ParticleSystem& sys, const EnergySpec& spec,
                             double dt);

SimResult run_fixed(const ParticleSystem& initial, const EnergySpec& spec,
                    const StepControl& control);
SimResult run_adaptive(const ParticleSystem& initial, const EnergySpec& spec,
                       const StepControl& control);
// Dispatches on control.mode.
SimResult run(const ParticleSystem& initial, const EnergySpec& spec,
              const StepControl& control);

// Diffusive stability guide dt = C / N^2.
double cfl_suggestion(std::size_t n, double c = 0.1);

}  // namespace blobflow
