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

#include "blobflow/softmin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "blobflow/error.hpp"

namespace blobflow {
namespace {

void check_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::InvalidArgument, "softmin exponent must be positive");
  }
}

// Smallest entry; validates positivity and that at least one entry is finite.
double checked_min(std::span<const double> values) {
  if (values.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "softmin needs at least two values");
  }
  double t = std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::NonpositiveInput, "softmin input must be positive");
    }
    t = std::min(t, v);
  }
  if (std::isinf(t)) {
    throw Error(ErrorCode::AllInfinite, "softmin of all-infinite values");
  }
  return t;
}

double softmin_unchecked(std::span<const double> values, double p, double t) {
  double sum = 0.0;
  for (double v : values) {
    if (std::isfinite(v)) sum += std::pow(t / v, p);
  }
  const double s = static_cast<double>(values.size());
  return t * std::pow(sum / s, -1.0 / p);
}

}  // namespace

double softmin(std::span<const double> values, double p) {
  check_exponent(p);
  const double t = checked_min(values);
  return softmin_unchecked(values, p, t);
}

void softmin_gradient(std::span<const double> values, double p,
                      std::span<double> out) {
  check_exponent(p);
  if (out.size() != values.size()) {
    throw Error(ErrorCode::InvalidArgument, "gradient buffer size mismatch");
  }
  const double t = checked_min(values);
  const double value = softmin_unchecked(values, p, t);
  const double inv_s = 1.0 / static_cast<double>(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    out[k] = std::isfinite(values[k]) ? inv_s * std::pow(value / values[k], p + 1.0)
                                      : 0.0;
  }
}

std::vector<double> softmin_gradient(std::span<const double> values, double p) {
  std::vector<double> out(values.size());
  softmin_gradient(values, p, out);
  return out;
}

double softmin_pair(double a, double b, double p) {
  const double v[2] = {a, b};
  return softmin(v, p);
}

SoftminPair softmin_pair_with_gradient(double a, double b, double p) {
  check_exponent(p);
  const double v[2] = {a, b};
  const double value = softmin_unchecked(v, p, checked_min(v));
  const auto partial = [&](double x) {
    return std::isfinite(x) ? 0.5 * std::pow(value / x, p + 1.0) : 0.0;
  };
  return {value, partial(a), partial(b)};
}

}  // namespace blobflow
