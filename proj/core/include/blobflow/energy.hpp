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
#include <vector>

#include "blobflow/energy_spec.hpp"
#include "blobflow/particles.hpp"

namespace blobflow {

struct EnergyBreakdown {
  double internal = 0.0;
  double confinement = 0.0;
  double interaction = 0.0;
  double total = 0.0;
};

// |B_i^p| in 1D: softmin_p of the two adjacent gaps, the outer gap of an end
// particle being +inf (so end balls have length 2^(1/p) * gap).
double ball_volume_1d(const ParticleSystem& sys, std::size_t i, double p);

// Volume of the d-ball whose radius is half the softmin_p of the distances
// from particle i to every other particle.
double ball_volume_general(const ParticleSystem& sys, std::size_t i, double p);

std::vector<double> ball_volumes(const ParticleSystem& sys, double p,
                                 BallConvention balls);

// |B| H(w / |B|).
double internal_term(const InternalEnergy& h, double w, double vol);

// Smoothed discrete energy: internal part on the softmin balls, confinement
// on the atoms, pairwise interaction without the diagonal.
EnergyBreakdown discrete_energy(const ParticleSystem& sys, const EnergySpec& spec);

// Unweighted gradient dE/dx, flat N*d.
std::vector<double> energy_gradient(const ParticleSystem& sys, const EnergySpec& spec);

// Weighted gradient: component i is (1/w_i) dE/dx_i. The particle velocity
// of the gradient flow is its negative.
std::vector<double> weighted_gradient(const ParticleSystem& sys, const EnergySpec& spec);

}  // namespace blobflow
