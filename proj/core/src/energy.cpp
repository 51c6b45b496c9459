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

#include "blobflow/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "blobflow/error.hpp"
#include "blobflow/softmin.hpp"

namespace blobflow {
namespace {

constexpr double kCoincidenceFactor = 1e-14;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Unit-ball volume: 2 in 1D (an interval of length 2r), pi in 2D.
double unit_ball_volume(int dim) {
  return dim == 1 ? 2.0 : std::numbers::pi;
}

[[noreturn]] void throw_coincident(std::size_t i, std::size_t j) {
  throw Error(ErrorCode::CoincidentParticles,
              "particles " + std::to_string(i) + " and " + std::to_string(j) +
                  " are numerically coincident");
}

double distance(const ParticleSystem& sys, std::size_t i, std::size_t j) {
  if (sys.dim() == 1) return std::abs(sys.x(i) - sys.x(j));
  const auto a = sys.point(i);
  const auto b = sys.point(j);
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

double coincidence_threshold(const ParticleSystem& sys) {
  return kCoincidenceFactor * sys.diameter();
}

void check_gaps_1d(const ParticleSystem& sys) {
  const double tol = coincidence_threshold(sys);
  for (std::size_t k = 1; k < sys.size(); ++k) {
    if (!(sys.gap(k) > tol)) throw_coincident(k - 1, k);
  }
}

// softmin_p over the distances from particle i to all others; a single
// distance (N = 2) is returned as is.
double all_pairs_softmin(std::span<const double> dist, double p) {
  const double t = *std::min_element(dist.begin(), dist.end());
  double sum = 0.0;
  for (double d : dist) sum += std::pow(t / d, p);
  return t * std::pow(sum / static_cast<double>(dist.size()), -1.0 / p);
}

// d/dvol of vol * H(w/vol), i.e. H(rho) - rho H'(rho) at rho = w/vol.
double internal_term_volume_derivative(const InternalEnergy& h, double w,
                                       double vol) {
  const double rho = w / vol;
  return std::visit(overloaded{
                        [](const NoInternal&) { return 0.0; },
                        [rho](const Entropy&) { return -rho; },
                        [rho](const PowerLaw& e) { return -std::pow(rho, e.m); },
                    },
                    h);
}

// Distances from particle i to every other particle, in index order
// skipping i. Throws when one of them is below the coincidence threshold.
void distances_from(const ParticleSystem& sys, std::size_t i, double tol,
                    std::vector<double>& out) {
  out.clear();
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (j == i) continue;
    const double d = distance(sys, i, j);
    if (!(d > tol)) throw_coincident(std::min(i, j), std::max(i, j));
    out.push_back(d);
  }
}

void add_internal_gradient_1d(const ParticleSystem& sys, const EnergySpec& spec,
                              std::vector<double>& grad) {
  check_gaps_1d(sys);
  const std::size_t n = sys.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = softmin_pair_with_gradient(sys.gap(i), sys.gap(i + 1), spec.p);
    const double g = internal_term_volume_derivative(spec.internal, sys.weight(i), r.value);
    // gap(i) = x_i - x_{i-1}, gap(i+1) = x_{i+1} - x_i.
    grad[i] += g * (r.d_a - r.d_b);
    if (i > 0) grad[i - 1] -= g * r.d_a;
    if (i + 1 < n) grad[i + 1] += g * r.d_b;
  }
}

void add_internal_gradient_all_pairs(const ParticleSystem& sys,
                                     const EnergySpec& spec,
                                     std::vector<double>& grad) {
  const std::size_t n = sys.size();
  const int dim = sys.dim();
  const double omega = unit_ball_volume(dim);
  const double tol = coincidence_threshold(sys);
  const double inv_count = 1.0 / static_cast<double>(n - 1);
  std::vector<double> dist;
  dist.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    distances_from(sys, i, tol, dist);
    const double s = all_pairs_softmin(dist, spec.p);
    const double radius = 0.5 * s;
    const double vol = omega * std::pow(radius, dim);
    const double g = internal_term_volume_derivative(spec.internal, sys.weight(i), vol);
    // dvol/ds with s = 2 radius.
    const double dvol_ds = 0.5 * dim * omega * std::pow(radius, dim - 1);
    const double scale = g * dvol_ds * inv_count;
    std::size_t k = 0;
    const auto xi = sys.point(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = dist[k++];
      const double c = scale * std::pow(s / d, spec.p + 1.0) / d;
      const auto xj = sys.point(j);
      for (int a = 0; a < dim; ++a) {
        const double f = c * (xi[a] - xj[a]);
        grad[i * dim + a] += f;
        grad[j * dim + a] -= f;
      }
    }
  }
}

}  // namespace

double ball_volume_1d(const ParticleSystem& sys, std::size_t i, double p) {
  if (sys.dim() != 1) {
    throw Error(ErrorCode::InvalidArgument, "adjacent-gap balls need a 1D system");
  }
  return softmin_pair(sys.gap(i), sys.gap(i + 1), p);
}

double ball_volume_general(const ParticleSystem& sys, std::size_t i, double p) {
  std::vector<double> dist;
  distances_from(sys, i, 0.0, dist);
  const double radius = 0.5 * all_pairs_softmin(dist, p);
  return unit_ball_volume(sys.dim()) * std::pow(radius, sys.dim());
}

std::vector<double> ball_volumes(const ParticleSystem& sys, double p,
                                 BallConvention balls) {
  const BallConvention mode = resolve_balls(balls, sys.dim());
  std::vector<double> out(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out[i] = mode == BallConvention::AdjacentGaps ? ball_volume_1d(sys, i, p)
                                                  : ball_volume_general(sys, i, p);
  }
  return out;
}

double internal_term(const InternalEnergy& h, double w, double vol) {
  return std::visit(overloaded{
                        [](const NoInternal&) { return 0.0; },
                        [w, vol](const Entropy&) { return w * std::log(w / vol); },
                        [w, vol](const PowerLaw& e) {
                          return std::pow(w, e.m) * std::pow(vol, 1.0 - e.m) / (e.m - 1.0);
                        },
                    },
                    h);
}

EnergyBreakdown discrete_energy(const ParticleSystem& sys, const EnergySpec& spec) {
  spec.validate();
  EnergyBreakdown e;
  const std::size_t n = sys.size();

  if (spec.has_internal()) {
    if (resolve_balls(spec.balls, sys.dim()) == BallConvention::AdjacentGaps) {
      check_gaps_1d(sys);
    }
    const auto vols = ball_volumes(sys, spec.p, spec.balls);
    for (std::size_t i = 0; i < n; ++i) {
      e.internal += internal_term(spec.internal, sys.weight(i), vols[i]);
    }
  }
  if (spec.has_confinement()) {
    for (std::size_t i = 0; i < n; ++i) {
      e.confinement += sys.weight(i) * confinement_value(spec.confinement, sys.point(i));
    }
  }
  if (spec.has_interaction()) {
    const bool singular = std::holds_alternative<LogAttraction>(spec.interaction);
    const double tol = coincidence_threshold(sys);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double r = distance(sys, i, j);
        if (singular && !(r > tol)) throw_coincident(i, j);
        e.interaction += sys.weight(i) * sys.weight(j) * interaction_value(spec.interaction, r);
      }
    }
  }
  e.total = e.internal + e.confinement + e.interaction;
  return e;
}

std::vector<double> energy_gradient(const ParticleSystem& sys, const EnergySpec& spec) {
  spec.validate();
  const std::size_t n = sys.size();
  const int dim = sys.dim();
  std::vector<double> grad(n * dim, 0.0);

  if (spec.has_internal()) {
    if (resolve_balls(spec.balls, dim) == BallConvention::AdjacentGaps) {
      add_internal_gradient_1d(sys, spec, grad);
    } else {
      add_internal_gradient_all_pairs(sys, spec, grad);
    }
  }
  if (spec.has_confinement()) {
    double buf[2];
    for (std::size_t i = 0; i < n; ++i) {
      const std::span<double> out(buf, dim);
      confinement_gradient(spec.confinement, sys.point(i), out);
      for (int a = 0; a < dim; ++a) grad[i * dim + a] += sys.weight(i) * out[a];
    }
  }
  if (spec.has_interaction()) {
    const bool singular = std::holds_alternative<LogAttraction>(spec.interaction);
    const double tol = coincidence_threshold(sys);
    for (std::size_t i = 0; i < n; ++i) {
      const auto xi = sys.point(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const double r = distance(sys, i, j);
        if (!(r > tol)) {
          if (singular) throw_coincident(i, j);
          continue;  // zero subgradient element at r = 0
        }
        const double c = sys.weight(i) * sys.weight(j) *
                         interaction_radial_derivative(spec.interaction, r) / r;
        const auto xj = sys.point(j);
        for (int a = 0; a < dim; ++a) {
          const double f = c * (xi[a] - xj[a]);
          grad[i * dim + a] += f;
          grad[j * dim + a] -= f;
        }
      }
    }
  }
  return grad;
}

std::vector<double> weighted_gradient(const ParticleSystem& sys, const EnergySpec& spec) {
  auto grad = energy_gradient(sys, spec);
  const int dim = sys.dim();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (int a = 0; a < dim; ++a) grad[i * dim + a] /= sys.weight(i);
  }
  return grad;
}

}  // namespace blobflow
