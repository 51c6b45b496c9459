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

#include "blobflow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "blobflow/error.hpp"

namespace blobflow {
namespace {

constexpr double kLevelClamp = 1e-14;
constexpr int kEndCellLevels = 50;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      c_ += (sum_ - t) + v;
    } else {
      c_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

// int_a^b (x - Phi(t, eps))^2 d eps with one 32-point rule.
double cell_integral(const ReferenceSolution& ref, double t, double x, double a,
                     double b) {
  const auto& gl = gauss_legendre_32();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double acc = 0.0;
  for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
    const double eps = std::clamp(mid + half * gl.nodes[k], kLevelClamp, 1.0 - kLevelClamp);
    const double d = x - ref.quantile(t, eps);
    acc += gl.weights[k] * d * d;
  }
  return half * acc;
}

// Same integral over [a, b], split geometrically toward a (toward_zero) or b,
// the endpoint where the quantile may be singular.
double end_cell_integral(const ReferenceSolution& ref, double t, double x, double a,
                         double b, bool toward_zero) {
  const double len = b - a;
  double acc = 0.0;
  double outer = len;
  for (int level = 0; level < kEndCellLevels; ++level) {
    const double inner = 0.5 * outer;
    acc += toward_zero ? cell_integral(ref, t, x, a + inner, a + outer)
                       : cell_integral(ref, t, x, b - outer, b - inner);
    outer = inner;
  }
  acc += toward_zero ? cell_integral(ref, t, x, a, a + outer)
                     : cell_integral(ref, t, x, b - outer, b);
  return acc;
}

}  // namespace

GaussLegendre make_gauss_legendre(std::size_t order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "quadrature order must be >= 1");
  GaussLegendre gl;
  gl.nodes.resize(order);
  gl.weights.resize(order);
  const double n = static_cast<double>(order);
  for (std::size_t i = 0; i < (order + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (std::size_t j = 1; j <= order; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double dj = static_cast<double>(j);
        p1 = ((2.0 * dj - 1.0) * z * p2 - (dj - 1.0) * p3) / dj;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    gl.nodes[i] = -z;
    gl.nodes[order - 1 - i] = z;
    gl.weights[i] = gl.weights[order - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return gl;
}

const GaussLegendre& gauss_legendre_32() {
  static const GaussLegendre gl = make_gauss_legendre(32);
  return gl;
}

void MetricSeries::append(double t, const ParticleSystem& sys, const EnergySpec& spec) {
  times.push_back(t);
  energy.push_back(discrete_energy(sys, spec));
  second_moment.push_back(blobflow::second_moment(sys));
  entropy.push_back(discrete_entropy(sys, spec.p, spec.balls));
}

double wasserstein_error(const ParticleSystem& sys, const ReferenceSolution& ref,
                         double t) {
  if (sys.dim() != 1) {
    throw Error(ErrorCode::InvalidArgument, "Wasserstein error needs a 1D system");
  }
  const std::size_t n = sys.size();
  CompensatedSum omega;
  CompensatedSum total;
  double lo = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    omega.add(sys.weight(i));
    const double hi = i + 1 == n ? 1.0 : std::min(omega.value(), 1.0);
    if (hi > lo) {
      double cell;
      if (i == 0) {
        cell = end_cell_integral(ref, t, sys.x(i), lo, hi, true);
      } else if (i + 1 == n) {
        cell = end_cell_integral(ref, t, sys.x(i), lo, hi, false);
      } else {
        cell = cell_integral(ref, t, sys.x(i), lo, hi);
      }
      total.add(cell);
    }
    lo = hi;
  }
  return std::sqrt(std::max(total.value(), 0.0));
}

double discrete_error(const ParticleSystem& a, const ParticleSystem& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) {
    throw Error(ErrorCode::WeightMismatch, "systems differ in size or dimension");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.weight(i) - b.weight(i)) > 1e-12) {
      throw Error(ErrorCode::WeightMismatch, "systems carry different weights");
    }
  }
  CompensatedSum acc;
  const auto ca = a.coords();
  const auto cb = b.coords();
  const int dim = a.dim();
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d2 = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double d = ca[i * dim + k] - cb[i * dim + k];
      d2 += d * d;
    }
    acc.add(a.weight(i) * d2);
  }
  return std::sqrt(acc.value());
}

double second_moment(const ParticleSystem& sys) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    double r2 = 0.0;
    for (double c : sys.point(i)) r2 += c * c;
    acc.add(sys.weight(i) * r2);
  }
  return acc.value();
}

double discrete_entropy(const ParticleSystem& sys, double p, BallConvention balls) {
  const auto vols = ball_volumes(sys, p, balls);
  CompensatedSum acc;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    acc.add(sys.weight(i) * std::log(sys.weight(i) / vols[i]));
  }
  return acc.value();
}

double fit_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::InvalidArgument, "slope fit needs paired samples");
  }
  if (xs.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "slope fit needs at least two points");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  if (!(sxx > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "slope fit needs distinct abscissae");
  }
  return sxy / sxx;
}

double predicted_moment_slope(std::size_t n, double chi) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "N must be at least 2");
  return 2.0 * (1.0 - chi * (1.0 - 1.0 / static_cast<double>(n)));
}

double chi_critical(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "N must be at least 2");
  return 1.0 + 1.0 / static_cast<double>(n - 1);
}

}  // namespace blobflow
