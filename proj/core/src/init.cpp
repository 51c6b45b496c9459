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

#include "blobflow/init.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "blobflow/error.hpp"
#include "blobflow/reference.hpp"
#include "blobflow/special.hpp"

namespace blobflow {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void not_1d() {
  throw Error(ErrorCode::InvalidArgument, "profile is not one-dimensional");
}

void require_count(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "at least two particles required");
}

}  // namespace

double profile_density(const ProfileSpec& profile, double x) {
  return std::visit(
      overloaded{
          [x](const GaussianHeat& g) { return ReferenceSolution::heat(g.t0).density(0.0, x); },
          [x](const BarenblattProfile& b) {
            return ReferenceSolution::barenblatt(b.m, b.t0).density(0.0, x);
          },
          [x](const TwoBump& g) {
            const auto heat = ReferenceSolution::heat(g.t0);
            return 0.5 * heat.density(0.0, x + g.center) + 0.5 * heat.density(0.0, x - g.center);
          },
          [x](const Uniform& u) { return (x >= u.a && x <= u.b) ? 1.0 / (u.b - u.a) : 0.0; },
          [](const Gaussian2D&) -> double { not_1d(); },
      },
      profile);
}

double profile_cdf(const ProfileSpec& profile, double x) {
  return std::visit(
      overloaded{
          [x](const GaussianHeat& g) { return ReferenceSolution::heat(g.t0).cdf(0.0, x); },
          [x](const BarenblattProfile& b) {
            return ReferenceSolution::barenblatt(b.m, b.t0).cdf(0.0, x);
          },
          [x](const TwoBump& g) {
            const auto heat = ReferenceSolution::heat(g.t0);
            return 0.5 * heat.cdf(0.0, x + g.center) + 0.5 * heat.cdf(0.0, x - g.center);
          },
          [x](const Uniform& u) {
            if (x <= u.a) return 0.0;
            if (x >= u.b) return 1.0;
            return (x - u.a) / (u.b - u.a);
          },
          [](const Gaussian2D&) -> double { not_1d(); },
      },
      profile);
}

std::optional<double> profile_quantile(const ProfileSpec& profile, double eps) {
  return std::visit(
      overloaded{
          [eps](const GaussianHeat& g) -> std::optional<double> {
            return ReferenceSolution::heat(g.t0).quantile(0.0, eps);
          },
          [eps](const BarenblattProfile& b) -> std::optional<double> {
            return ReferenceSolution::barenblatt(b.m, b.t0).quantile(0.0, eps);
          },
          [](const TwoBump&) -> std::optional<double> { return std::nullopt; },
          [eps](const Uniform& u) -> std::optional<double> {
            return u.a + eps * (u.b - u.a);
          },
          [](const Gaussian2D&) -> std::optional<double> { return std::nullopt; },
      },
      profile);
}

ParticleSystem init_equal_weights(const ProfileSpec& profile, std::size_t n) {
  require_count(n);
  std::vector<double> x(n);
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double eps = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * dn);
    const auto q = profile_quantile(profile, eps);
    if (!q) {
      throw Error(ErrorCode::InvalidArgument,
                  "profile has no closed-form quantile; use equal spacing");
    }
    if (!std::isfinite(*q)) {
      throw Error(ErrorCode::UnboundedQuantile,
                  "quantile at level " + std::to_string(eps) + " is unbounded");
    }
    x[i] = *q;
  }
  return ParticleSystem::build_1d(std::move(x), std::vector<double>(n, 1.0 / dn));
}

ParticleSystem init_equal_spacing(const ProfileSpec& profile, std::size_t n,
                                  Interval span, std::optional<double> end_weight) {
  require_count(n);
  if (!(span.hi > span.lo)) {
    throw Error(ErrorCode::InvalidArgument, "initial interval must satisfy lo < hi");
  }
  const double h = (span.hi - span.lo) / static_cast<double>(n - 1);
  std::vector<double> x(n), w(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = span.lo + static_cast<double>(i) * h;
  x.back() = span.hi;

  // F at the midpoints x_{i+1/2}, i = 0..n-2.
  std::vector<double> f(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    f[i] = profile_cdf(profile, 0.5 * (x[i] + x[i + 1]));
  }
  w[0] = f[0];
  for (std::size_t i = 1; i + 1 < n; ++i) w[i] = f[i] - f[i - 1];
  w[n - 1] = 1.0 - f[n - 2];

  for (std::size_t i = 0; i < n; ++i) {
    if (!(w[i] > 0.0)) {
      throw Error(ErrorCode::ZeroWeight,
                  "particle " + std::to_string(i) + " at x = " + std::to_string(x[i]) +
                      " carries no mass; choose the interval inside the support");
    }
  }
  if (end_weight) {
    if (!(*end_weight > 0.0)) {
      throw Error(ErrorCode::NonpositiveWeight, "end weight must be positive");
    }
    w.front() = *end_weight;
    w.back() = *end_weight;
    double total = 0.0;
    for (double wi : w) total += wi;
    for (double& wi : w) wi /= total;
  }
  return ParticleSystem::build_1d(std::move(x), std::move(w));
}

ParticleSystem init_grid_2d(const Gaussian2D& profile, std::size_t side,
                            double half_extent) {
  require_count(side);
  if (!(profile.t0 > 0.0) || !(half_extent > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "t0 and grid extent must be positive");
  }
  const double h = 2.0 * half_extent / static_cast<double>(side - 1);
  const double scale = std::sqrt(4.0 * profile.t0);
  std::vector<double> nodes(side), mass(side);
  for (std::size_t k = 0; k < side; ++k) {
    nodes[k] = -half_extent + static_cast<double>(k) * h;
    // 1D marginal mass of [node - h/2, node + h/2].
    const double a = (nodes[k] - 0.5 * h) / scale;
    const double b = (nodes[k] + 0.5 * h) / scale;
    mass[k] = 0.5 * (special::erf(b) - special::erf(a));
  }
  std::vector<double> coords;
  std::vector<double> w;
  coords.reserve(2 * side * side);
  w.reserve(side * side);
  double total = 0.0;
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      coords.push_back(nodes[c]);
      coords.push_back(nodes[r]);
      w.push_back(mass[c] * mass[r]);
      total += w.back();
    }
  }
  for (double& wi : w) wi /= total;
  return ParticleSystem::build(2, std::move(coords), std::move(w));
}

}  // namespace blobflow
