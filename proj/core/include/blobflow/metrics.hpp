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
#include <span>
#include <vector>

#include "blobflow/energy.hpp"
#include "blobflow/energy_spec.hpp"
#include "blobflow/particles.hpp"
#include "blobflow/reference.hpp"

namespace blobflow {

// Diagnostics sampled at snapshot times. All series have times.size() entries;
// errors is either empty or full.
struct MetricSeries {
  std::vector<double> times;
  std::vector<EnergyBreakdown> energy;
  std::vector<double> second_moment;
  std::vector<double> entropy;
  std::vector<double> errors;

  std::size_t size() const noexcept { return times.size(); }
  void append(double t, const ParticleSystem& sys, const EnergySpec& spec);
};

// Quadratic Wasserstein distance between the empirical measure of a 1D system
// and ref at time t, through the pseudo-inverse representation: cell i covers
// [Omega_{i-1}, Omega_i) of cumulative weight, and the squared error sums
// int (x_i - Phi(t, eps))^2 d eps over the cells (32-point Gauss-Legendre per
// cell, geometrically graded in the two end cells).
double wasserstein_error(const ParticleSystem& sys, const ReferenceSolution& ref,
                         double t);

// Weighted Euclidean distance sqrt(sum w_i |a_i - b_i|^2) between two systems
// sharing weights (WeightMismatch otherwise).
double discrete_error(const ParticleSystem& a, const ParticleSystem& b);

double second_moment(const ParticleSystem& sys);

// sum w_i log(w_i / |B_i^p|) with the requested ball convention.
double discrete_entropy(const ParticleSystem& sys, double p,
                        BallConvention balls = BallConvention::Auto);

// Ordinary least-squares slope of ys against xs.
double fit_slope(std::span<const double> xs, std::span<const double> ys);

// Second-moment slope 2 (1 - chi (1 - 1/N)) of the unconfined equal-weight
// log-attraction flow with entropy diffusion, and the critical sensitivity
// 1 + 1/(N - 1) at which it vanishes.
double predicted_moment_slope(std::size_t n, double chi);
double chi_critical(std::size_t n);

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre_32();
GaussLegendre make_gauss_legendre(std::size_t order);

}  // namespace blobflow
