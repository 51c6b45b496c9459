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

#include "blobflow/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "blobflow/error.hpp"

namespace blobflow::special {
namespace {

constexpr int kMaxIterations = 100;

[[noreturn]] void domain_error(const std::string& what) {
  throw Error(ErrorCode::DomainError, what);
}

// Single-precision starting point for erfinv (M. Giles, 2010).
double erfinv_guess(double y) {
  double w = -std::log((1.0 - y) * (1.0 + y));
  double p;
  if (w < 5.0) {
    w -= 2.5;
    p = 2.81022636e-08;
    p = 3.43273939e-07 + p * w;
    p = -3.5233877e-06 + p * w;
    p = -4.39150654e-06 + p * w;
    p = 0.00021858087 + p * w;
    p = -0.00125372503 + p * w;
    p = -0.00417768164 + p * w;
    p = 0.246640727 + p * w;
    p = 1.50140941 + p * w;
  } else {
    w = std::sqrt(w) - 3.0;
    p = -0.000200214257;
    p = 0.000100950558 + p * w;
    p = 0.00134934322 + p * w;
    p = -0.00367342844 + p * w;
    p = 0.00573950773 + p * w;
    p = -0.0076224613 + p * w;
    p = 0.00943887047 + p * w;
    p = 1.00167406 + p * w;
    p = 2.83297682 + p * w;
  }
  return p * y;
}

// Continued fraction for I(x; a, b), modified Lentz.
double beta_continued_fraction(double x, double a, double b) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 1000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) return h;
  }
  domain_error("incomplete beta continued fraction did not converge");
}

// log of x^a (1-x)^b / B(a, b)
double log_beta_prefactor(double x, double a, double b) {
  return std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
         b * std::log1p(-x);
}

}  // namespace

double erf(double x) { return std::erf(x); }
double erfc(double x) { return std::erfc(x); }

double erfinv(double y) {
  if (!(std::abs(y) < 1.0)) {
    domain_error("erfinv argument must lie in (-1, 1)");
  }
  if (y == 0.0) return 0.0;
  // Work on |y| and restore the sign; the residual is taken through erfc in
  // the upper half where 1 - |y| is exact.
  const double ay = std::abs(y);
  double x = erfinv_guess(ay);
  const double two_over_sqrt_pi = 2.0 / std::sqrt(std::numbers::pi);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double f = ay > 0.5 ? (1.0 - ay) - std::erfc(x) : std::erf(x) - ay;
    if (f == 0.0) break;
    const double df = two_over_sqrt_pi * std::exp(-x * x);
    const double step = f / (df + x * f);  // Halley
    x -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      break;
    }
  }
  return y < 0.0 ? -x : x;
}

double gamma(double x) { return std::tgamma(x); }
double log_gamma(double x) { return std::lgamma(x); }

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) domain_error("beta parameters must be positive");
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double reg_inc_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    domain_error("incomplete beta parameters must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) domain_error("incomplete beta argument must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front = std::exp(log_beta_prefactor(x, a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(x, a, b) / a;
  }
  return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double inv_reg_inc_beta(double y, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    domain_error("incomplete beta parameters must be positive");
  }
  if (!(y >= 0.0 && y <= 1.0)) domain_error("inverse incomplete beta needs y in [0, 1]");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 1.0;

  // Starting point from the leading power-law behaviour at either end.
  const double lna = std::log(a / (a + b));
  const double lnb = std::log(b / (a + b));
  const double t = std::exp(a * lna) / a;
  const double u = std::exp(b * lnb) / b;
  const double w = t + u;
  double x = y < t / w ? std::pow(a * w * y, 1.0 / a)
                       : 1.0 - std::pow(b * w * (1.0 - y), 1.0 / b);
  double lo = 0.0;
  double hi = 1.0;
  if (!(x > lo && x < hi)) x = 0.5;

  const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double f = reg_inc_beta(x, a, b) - y;
    if (f == 0.0) return x;
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double df =
        std::exp(log_norm + (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x));
    double next = x - f / df;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 2.0 * std::numeric_limits<double>::epsilon() * x ||
        hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace blobflow::special
