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

#include <span>
#include <vector>

namespace blobflow {

// Smooth p-approximation of the minimum of s >= 2 positive reals,
//
//   softmin_p(x) = ((1/s) * sum_k x_k^-p)^(-1/p).
//
// Entries equal to +inf contribute nothing to the sum, so
// softmin_p(a, +inf) = 2^(1/p) * a. The sum is evaluated on ratios
// min(x)/x_k <= 1, which keeps large p from overflowing.
//
// Throws NonpositiveInput for entries <= 0 (or NaN), AllInfinite when no
// entry is finite, InvalidArgument for s < 2 or p not a positive finite real.
double softmin(std::span<const double> values, double p);

// Partial derivatives of softmin: (1/s) * (softmin/x_k)^(p+1), and 0 for
// infinite entries. Writes into out, which must have the same length.
void softmin_gradient(std::span<const double> values, double p,
                      std::span<double> out);
std::vector<double> softmin_gradient(std::span<const double> values, double p);

// Two-argument fast path used by the 1D ball radii.
double softmin_pair(double a, double b, double p);

struct SoftminPair {
  double value;
  double d_a;
  double d_b;
};
SoftminPair softmin_pair_with_gradient(double a, double b, double p);

}  // namespace blobflow
