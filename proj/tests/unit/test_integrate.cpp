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

#include <cmath>

#include "blobflow/error.hpp"
#include "blobflow/init.hpp"
#include "blobflow/integrate.hpp"

namespace blobflow {
namespace {

EnergySpec heat_spec() {
  EnergySpec s;
  s.internal = Entropy{};
  return s;
}

EnergySpec keller_segel(double chi, bool confined) {
  EnergySpec s;
  s.internal = Entropy{};
  s.interaction = LogAttraction{chi};
  if (confined) s.confinement = QuadraticConfinement{1.0};
  return s;
}

StepControl fixed(double dt, double T, bool override_cfl = false) {
  StepControl c;
  c.mode = FixedStep{dt, override_cfl};
  c.final_time = T;
  return c;
}

TEST(StepExplicit, LinearDrift) {
  const auto s = ParticleSystem::build_1d({-1.0, 0.5, 2.0}, {1, 1, 1});
  EnergySpec v;
  v.confinement = QuadraticConfinement{1.0};
  const auto next = step_explicit(s, v, 0.01);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(next.x(i), 0.99 * s.x(i));
  EXPECT_EQ(step_explicit(s, EnergySpec{}, 0.5), s);
}

TEST(StepExplicit, PairSpreads) {
  const auto s = ParticleSystem::build_1d({-0.2, 0.2}, {1, 1});
  const auto next = step_explicit(s, heat_spec(), 1e-3);
  EXPECT_GT(next.x(1) - next.x(0), 0.4);
}

TEST(StepExplicit, CrossingIsReported) {
  const auto s = ParticleSystem::build_1d({-1.0, 1.0}, {1, 1});
  EnergySpec v;
  v.confinement = QuadraticConfinement{1.0};
  try {
    step_explicit(s, v, 3.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderingViolated);
  }
}

TEST(CflSuggestion, Values) {
  EXPECT_DOUBLE_EQ(cfl_suggestion(50, 0.1), 4e-5);
  EXPECT_DOUBLE_EQ(cfl_suggestion(10), 1e-3);
  EXPECT_DOUBLE_EQ(cfl_suggestion(40) / cfl_suggestion(80), 4.0);
  EXPECT_THROW(cfl_suggestion(1), Error);
}

TEST(RunFixed, ZeroFinalTime) {
  const auto s = init_equal_weights(GaussianHeat{}, 10);
  const auto r = run_fixed(s, heat_spec(), fixed(1e-4, 0.0));
  ASSERT_EQ(r.snapshots.size(), 1u);
  EXPECT_EQ(r.stop.kind, StopKind::ReachedFinalTime);
  EXPECT_EQ(r.steps, 0u);
  EXPECT_EQ(r.metrics.size(), 1u);
}

TEST(RunFixed, RejectsStepAboveCflUnlessOverridden) {
  const auto s = init_equal_weights(GaussianHeat{}, 10);
  EXPECT_THROW(run_fixed(s, heat_spec(), fixed(2e-3, 0.01)), Error);
  EXPECT_NO_THROW(run_fixed(s, heat_spec(), fixed(2e-3, 0.01, true)));
}

TEST(RunFixed, HeatEnergyDecreases) {
  const auto s = init_equal_spacing(GaussianHeat{0.25}, 50, {-2.5, 2.5});
  auto c = fixed(1e-5, 0.1);
  c.snapshots.every_steps = 100;
  const auto r = run_fixed(s, heat_spec(), c);
  ASSERT_EQ(r.stop.kind, StopKind::ReachedFinalTime);
  ASSERT_EQ(r.snapshots.size(), 101u);
  for (std::size_t k = 1; k < r.metrics.size(); ++k) {
    EXPECT_LT(r.metrics.energy[k].total, r.metrics.energy[k - 1].total);
  }
}

TEST(RunFixed, SnapshotsLandOnRequestedTimes) {
  const auto s = init_equal_weights(GaussianHeat{}, 10);
  auto c = fixed(3e-4, 0.01);
  c.snapshots.every_time = 0.002;
  const auto r = run_fixed(s, heat_spec(), c);
  ASSERT_EQ(r.snapshots.size(), 6u);
  for (std::size_t k = 0; k < r.snapshots.size(); ++k) {
    EXPECT_NEAR(r.snapshots[k].t, 0.002 * static_cast<double>(k), 1e-15);
  }
  EXPECT_EQ(r.snapshots.back().t, 0.01);
}

TEST(RunFixed, OrderingViolationStopsTheRun) {
  const auto s = ParticleSystem::build_1d({-1.0, 0.0, 1.0}, {1, 1, 1});
  EnergySpec v;
  v.confinement = QuadraticConfinement{1.0};
  const auto r = run_fixed(s, v, fixed(3.0, 10.0, true));
  EXPECT_EQ(r.stop.kind, StopKind::OrderingViolated);
  EXPECT_EQ(r.stop.time, 0.0);
  EXPECT_EQ(r.snapshots.size(), 1u);
}

// From the continuum steady state the flow settles onto a nearby discrete
// equilibrium; the offset is a discretization effect concentrated in the tails.
TEST(RunFixed, LinearFokkerPlanckSettles) {
  const auto s = init_equal_weights(GaussianHeat{0.5}, 40);
  EnergySpec spec = heat_spec();
  spec.confinement = QuadraticConfinement{1.0};
  auto control = fixed(cfl_suggestion(40), 6.0);
  control.snapshots.every_time = 2.0;
  const auto r = run_fixed(s, spec, control);
  ASSERT_EQ(r.snapshots.size(), 4u);
  const auto& mid = r.snapshots[2].system;
  const auto& last = r.snapshots[3].system;
  double offset = 0.0, late = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    offset = std::max(offset, std::abs(last.x(i) - s.x(i)));
    late = std::max(late, std::abs(last.x(i) - mid.x(i)));
  }
  EXPECT_LT(offset, 0.05);
  EXPECT_LT(late, 1e-3);
  EXPECT_LT(late, 0.05 * offset);
}

TEST(RunProperty, MassAndCentreOfMass) {
  const ProfileSpec profiles[] = {GaussianHeat{0.25}, TwoBump{}};
  for (const auto& prof : profiles) {
    const auto s = init_equal_spacing(prof, 20, {-3.0, 3.0});
    auto c = fixed(cfl_suggestion(20), 0.05);
    c.snapshots.every_steps = 50;
    const auto r = run_fixed(s, keller_segel(1.2, false), c);
    double com0 = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) com0 += s.weight(i) * s.x(i);
    for (std::size_t k = 0; k < r.snapshots.size(); ++k) {
      const auto& sys = r.snapshots[k].system;
      EXPECT_TRUE(std::equal(sys.weights().begin(), sys.weights().end(), s.weights().begin()));
      double com = 0.0;
      for (std::size_t i = 0; i < sys.size(); ++i) com += sys.weight(i) * sys.x(i);
      EXPECT_NEAR(com, com0, 1e-10);
      if (k > 0) EXPECT_GT(r.snapshots[k].t, r.snapshots[k - 1].t);
    }
  }
}

TEST(RunAdaptive, ZeroVelocityKeepsStep) {
  const auto s = ParticleSystem::build_1d({0.0, 1.0, 2.0}, {1, 1, 1});
  StepControl c;
  c.mode = AdaptiveStep{};
  c.final_time = 1e-3;
  const auto r = run_adaptive(s, EnergySpec{}, c);
  EXPECT_EQ(r.stop.kind, StopKind::ReachedFinalTime);
  for (double dt : r.step_sizes) EXPECT_EQ(dt, 1e-5);
}

TEST(RunAdaptive, SupercriticalBlowsUp) {
  const auto s = init_equal_spacing(GaussianHeat{0.25}, 30, {-2.5, 2.5});
  StepControl c;
  c.mode = AdaptiveStep{};
  c.final_time = 5.0;
  const auto r = run_adaptive(s, keller_segel(1.5, false), c);
  EXPECT_EQ(r.stop.kind, StopKind::BlowUp);
  EXPECT_LT(r.stop.time, 5.0);
  EXPECT_LT(r.last_dt, 1e-7);
  EXPECT_EQ(r.snapshots.back().t, r.stop.time);
  for (std::size_t k = 1; k < r.step_sizes.size(); ++k) {
    EXPECT_LE(r.step_sizes[k], r.step_sizes[k - 1]);
  }
}

TEST(RunAdaptive, SubcriticalConfinedReachesEnd) {
  const auto s = init_equal_spacing(GaussianHeat{0.25}, 20, {-2.5, 2.5});
  StepControl c;
  c.mode = AdaptiveStep{};
  c.final_time = 0.5;
  const auto r = run_adaptive(s, keller_segel(0.5, true), c);
  EXPECT_EQ(r.stop.kind, StopKind::ReachedFinalTime);
  EXPECT_GT(r.min_separation, 0.1 * s.min_separation());
}

TEST(RunAdaptive, NeedsOneDimension) {
  const auto s = init_grid_2d(Gaussian2D{}, 3, 1.0);
  StepControl c;
  c.mode = AdaptiveStep{};
  EXPECT_THROW(run_adaptive(s, heat_spec(), c), Error);
}

TEST(StepControl, Validation) {
  StepControl c;
  c.mode = AdaptiveStep{1.5, 1e-5, 1e-7};
  EXPECT_THROW(c.validate(), Error);
  c.mode = AdaptiveStep{0.25, 1e-8, 1e-7};
  EXPECT_THROW(c.validate(), Error);
  c.mode = FixedStep{-1.0};
  EXPECT_THROW(c.validate(), Error);
  c.mode = FixedStep{};
  c.snapshots = {5, 0.1};
  EXPECT_THROW(c.validate(), Error);
  c.snapshots = {};
  c.final_time = -1;
  EXPECT_THROW(c.validate(), Error);
}

}  // namespace
}  // namespace blobflow
