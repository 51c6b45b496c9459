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

#include "blobflow/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "blobflow/error.hpp"
#include "blobflow/special.hpp"

namespace blobflow {
namespace {

void require_m(double m) {
  if (!(m > 1.0) || !std::isfinite(m)) {
    throw Error(ErrorCode::InvalidArgument, "porous-medium exponent m must exceed 1");
  }
}

}  // namespace

BarenblattConstants barenblatt_constants(double m) {
  require_m(m);
  BarenblattConstants c{};
  c.m = m;
  c.alpha = 1.0 / (m + 1.0);
  c.kappa = (m - 1.0) / (2.0 * m * (m + 1.0));
  const double q = 1.0 / (m - 1.0);
  c.K = std::pow(special::gamma(q + 1.5) * std::sqrt(c.kappa) /
                     (special::gamma(m / (m - 1.0)) * special::gamma(0.5)),
                 2.0 * (m - 1.0) / (m + 1.0));
  const double from_mass =
      std::pow(std::sqrt(c.kappa) / special::beta(0.5, m / (m - 1.0)), 1.0 / (q + 0.5));
  if (std::abs(c.K - from_mass) > 1e-10 * from_mass) {
    throw std::logic_error("Barenblatt constant K disagrees with mass normalization");
  }
  return c;
}

ConfinedPorousConstants confined_porous_constants(double m) {
  require_m(m);
  ConfinedPorousConstants c{};
  c.m = m;
  c.A = std::pow((m - 1.0) / (2.0 * m), 1.0 / (m - 1.0));
  c.R = std::pow(c.A * special::beta(0.5, m / (m - 1.0)), (1.0 - m) / (m + 1.0));
  return c;
}

ReferenceSolution ReferenceSolution::heat(double t0) {
  if (!(t0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "t0 must be positive");
  return ReferenceSolution(Kind::Heat, t0, 1.0);
}

ReferenceSolution ReferenceSolution::barenblatt(double m, double t0) {
  if (!(t0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "t0 must be positive");
  ReferenceSolution r(Kind::Barenblatt, t0, m);
  r.bb_ = barenblatt_constants(m);
  return r;
}

ReferenceSolution ReferenceSolution::fp_linear_steady() {
  return ReferenceSolution(Kind::FpLinearSteady, 0.0, 1.0);
}

ReferenceSolution ReferenceSolution::fp_nonlinear_steady(double m) {
  ReferenceSolution r(Kind::FpNonlinearSteady, 0.0, m);
  r.cp_ = confined_porous_constants(m);
  return r;
}

ReferenceSolution ReferenceSolution::uniform(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidArgument, "uniform law needs finite a < b");
  }
  ReferenceSolution r(Kind::Uniform, 0.0, 1.0);
  r.a_ = a;
  r.b_ = b;
  return r;
}

std::string ReferenceSolution::name() const {
  switch (kind_) {
    case Kind::Heat: return "heat";
    case Kind::Barenblatt: return "barenblatt";
    case Kind::FpLinearSteady: return "fp-linear-steady";
    case Kind::FpNonlinearSteady: return "fp-nonlinear-steady";
    case Kind::Uniform: return "uniform";
  }
  return "unknown";
}

double ReferenceSolution::sigma(double t) const {
  return kind_ == Kind::Heat ? std::sqrt(2.0 * (t + t0_)) : 1.0;
}

double ReferenceSolution::edge(double t) const {
  if (kind_ == Kind::Barenblatt) {
    return std::pow(t + t0_, bb_.alpha) * std::sqrt(bb_.K / bb_.kappa);
  }
  return cp_.R;
}

double ReferenceSolution::amplitude(double t) const {
  const double q = 1.0 / (m_ - 1.0);
  if (kind_ == Kind::Barenblatt) {
    return std::pow(t + t0_, -bb_.alpha) * std::pow(bb_.K, q);
  }
  return cp_.A * std::pow(cp_.R, 2.0 * q);
}

double ReferenceSolution::support_radius(double t) const {
  if (kind_ == Kind::Uniform) return std::max(std::abs(a_), std::abs(b_));
  if (kind_ == Kind::Heat || kind_ == Kind::FpLinearSteady) {
    return std::numeric_limits<double>::infinity();
  }
  return edge(t);
}

double ReferenceSolution::density(double t, double x) const {
  if (kind_ == Kind::Uniform) return x < a_ || x > b_ ? 0.0 : 1.0 / (b_ - a_);
  if (kind_ == Kind::Heat || kind_ == Kind::FpLinearSteady) {
    const double s = sigma(t);
    return std::exp(-0.5 * (x / s) * (x / s)) / (s * std::sqrt(2.0 * std::numbers::pi));
  }
  const double z = x / edge(t);
  const double base = 1.0 - z * z;
  if (base <= 0.0) return 0.0;
  return amplitude(t) * std::pow(base, 1.0 / (m_ - 1.0));
}

double ReferenceSolution::cdf(double t, double x) const {
  if (kind_ == Kind::Uniform) return std::clamp((x - a_) / (b_ - a_), 0.0, 1.0);
  if (kind_ == Kind::Heat || kind_ == Kind::FpLinearSteady) {
    return 0.5 * special::erfc(-x / (sigma(t) * std::numbers::sqrt2));
  }
  const double z = x / edge(t);
  if (z <= -1.0) return 0.0;
  if (z >= 1.0) return 1.0;
  const double half = 0.5 * special::reg_inc_beta(z * z, 0.5, m_ / (m_ - 1.0));
  return z < 0.0 ? 0.5 - half : 0.5 + half;
}

double ReferenceSolution::quantile(double t, double eps) const {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::DomainError, "quantile level must lie in [0, 1]");
  }
  if (kind_ == Kind::Uniform) return a_ + eps * (b_ - a_);
  if (kind_ == Kind::Heat || kind_ == Kind::FpLinearSteady) {
    if (eps == 0.0) return -std::numeric_limits<double>::infinity();
    if (eps == 1.0) return std::numeric_limits<double>::infinity();
    return sigma(t) * std::numbers::sqrt2 * special::erfinv(2.0 * eps - 1.0);
  }
  const double b = m_ / (m_ - 1.0);
  const double e = edge(t);
  if (eps < 0.5) return -e * std::sqrt(special::inv_reg_inc_beta(1.0 - 2.0 * eps, 0.5, b));
  return e * std::sqrt(special::inv_reg_inc_beta(2.0 * eps - 1.0, 0.5, b));
}

}  // namespace blobflow
