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

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "blobflow/energy.hpp"
#include "blobflow/init.hpp"
#include "blobflow/integrate.hpp"
#include "blobflow/special.hpp"

namespace {

using namespace blobflow;

EnergySpec keller_segel() {
  EnergySpec spec;
  spec.internal = Entropy{};
  spec.interaction = LogAttraction{1.0};
  return spec;
}

void BM_Gradient1d(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sys = init_equal_weights(GaussianHeat{0.25}, n);
  const auto spec = keller_segel();
  for (auto _ : state) benchmark::DoNotOptimize(weighted_gradient(sys, spec));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gradient1d)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

void BM_Gradient2d(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  std::vector<double> xy;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      xy.push_back(static_cast<double>(i) / static_cast<double>(side));
      xy.push_back(static_cast<double>(j) / static_cast<double>(side));
    }
  }
  const auto n = side * side;
  const auto sys = ParticleSystem::build(2, std::move(xy), std::vector<double>(n, 1.0 / n));
  EnergySpec spec;
  spec.internal = Entropy{};
  for (auto _ : state) benchmark::DoNotOptimize(weighted_gradient(sys, spec));
  state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Gradient2d)->DenseRange(6, 18, 4)->Complexity();

void BM_HeatRun(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sys = init_equal_weights(GaussianHeat{0.25}, n);
  EnergySpec spec;
  spec.internal = Entropy{};
  StepControl control;
  control.mode = FixedStep{cfl_suggestion(n), false};
  control.final_time = 0.01;
  for (auto _ : state) benchmark::DoNotOptimize(run_fixed(sys, spec, control));
}
BENCHMARK(BM_HeatRun)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Erfinv(benchmark::State& state) {
  double y = -0.999;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::erfinv(y));
    y = y > 0.999 ? -0.999 : y + 1e-3;
  }
}
BENCHMARK(BM_Erfinv);

void BM_RegIncBeta(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::reg_inc_beta(x, 0.5, 1.5));
    x = x > 0.999 ? 0.0 : x + 1e-3;
  }
}
BENCHMARK(BM_RegIncBeta);

void BM_InvRegIncBeta(benchmark::State& state) {
  double y = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::inv_reg_inc_beta(y, 0.5, 1.5));
    y = y > 0.998 ? 0.001 : y + 1e-3;
  }
}
BENCHMARK(BM_InvRegIncBeta);

}  // namespace

BENCHMARK_MAIN();
