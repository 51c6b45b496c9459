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
#include <variant>

#include "blobflow/particles.hpp"

namespace blobflow {

// Continuum initial profiles.
struct GaussianHeat {   // heat kernel at time t0 (variance 2 t0)
  double t0 = 0.25;
};
struct BarenblattProfile {
  double m = 2.0;
  double t0 = 0.25;
};
struct TwoBump {        // equal mixture of heat kernels centred at +-center
  double t0 = 0.25;
  double center = 2.0;
};
struct Uniform {
  double a = -2.0;
  double b = 2.0;
};
struct Gaussian2D {     // radial heat kernel in the plane at time t0
  double t0 = 0.125;
};
using ProfileSpec =
    std::variant<GaussianHeat, BarenblattProfile, TwoBump, Uniform, Gaussian2D>;

// 1D density, cumulative distribution and pseudo-inverse of a profile.
// profile_quantile returns nullopt where no closed form is available.
double profile_density(const ProfileSpec& profile, double x);
double profile_cdf(const ProfileSpec& profile, double x);
std::optional<double> profile_quantile(const ProfileSpec& profile, double eps);

struct Interval {
  double lo;
  double hi;
};

// Equal weights 1/N at the quantiles x_i = Phi_0((2i - 1) / (2N)).
ParticleSystem init_equal_weights(const ProfileSpec& profile, std::size_t n);

// Equally spaced positions spanning `span` with each weight the profile mass
// of the particle's Voronoi cell (the end cells are unbounded). When
// end_weight is given both end weights are replaced by it and the whole
// vector is rescaled to unit mass. Throws ZeroWeight when a cell carries no
// mass.
ParticleSystem init_equal_spacing(const ProfileSpec& profile, std::size_t n,
                                  Interval span,
                                  std::optional<double> end_weight = std::nullopt);

// n x n regular grid with nodes -L + k * 2L/(n-1) in each axis; each weight is
// the profile mass of the node's square Voronoi cell (boundary cells
// truncated at half a spacing), renormalized to one.
ParticleSystem init_grid_2d(const Gaussian2D& profile, std::size_t side,
                            double half_extent);

}  // namespace blobflow
