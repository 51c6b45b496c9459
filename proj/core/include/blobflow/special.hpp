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

namespace blobflow::special {

double erf(double x);
double erfc(double x);

// Inverse error function on (-1, 1); DomainError otherwise. Refined by
// Halley steps until erf(erfinv(y)) reproduces y to rounding.
double erfinv(double y);

double gamma(double x);
double log_gamma(double x);
// Complete Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
double beta(double a, double b);

// Regularized incomplete Beta function I(x; a, b) = B(x; a, b) / B(1; a, b)
// for x in [0, 1], a, b > 0 (continued fraction, Lentz).
double reg_inc_beta(double x, double a, double b);

// Inverse of x -> I(x; a, b) for y in [0, 1]: Newton iteration safeguarded
// by bisection on a shrinking bracket, at most 100 iterations.
double inv_reg_inc_beta(double y, double a, double b);

}  // namespace blobflow::special
