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

#include <string>

namespace blobflow {

// Self-similar porous-medium profile constants for exponent m:
// rho(t, x) = (t + t0)^-alpha psi(x / (t + t0)^alpha),
// psi(xi) = (K - kappa xi^2)_+^(1/(m-1)).
struct BarenblattConstants {
  double m;
  double alpha;
  double kappa;
  double K;
};

// K is taken from the Gamma-function expression and checked against the
// unit-mass identity K^(1/(m-1) + 1/2) kappa^(-1/2) = 1 / B(1/2, m/(m-1)).
BarenblattConstants barenblatt_constants(double m);

// Steady state of porous-medium diffusion in the potential x^2/2:
// rho = A (R^2 - x^2)_+^(1/(m-1)).
struct ConfinedPorousConstants {
  double m;
  double A;
  double R;
};
ConfinedPorousConstants confined_porous_constants(double m);

// Closed-form 1D density with its cumulative distribution and pseudo-inverse.
// Steady states ignore t.
class ReferenceSolution {
 public:
  enum class Kind { Heat, Barenblatt, FpLinearSteady, FpNonlinearSteady, Uniform };

  static ReferenceSolution heat(double t0);
  static ReferenceSolution barenblatt(double m, double t0);
  static ReferenceSolution fp_linear_steady();
  static ReferenceSolution fp_nonlinear_steady(double m);
  // Time-independent uniform law on [a, b]; a test oracle with linear quantile.
  static ReferenceSolution uniform(double a, double b);

  Kind kind() const noexcept { return kind_; }
  std::string name() const;

  double density(double t, double x) const;
  double cdf(double t, double x) const;
  // inf{x : F(t, x) > eps}; +-inf at the ends of the Gaussian profiles.
  double quantile(double t, double eps) const;
  // Half-width of the support, +inf for Gaussians.
  double support_radius(double t) const;

 private:
  ReferenceSolution(Kind kind, double t0, double m) : kind_(kind), t0_(t0), m_(m) {}

  // Gaussian standard deviation at time t (heat, fp-linear).
  double sigma(double t) const;
  // Compact profiles: rho = amplitude * (1 - (x/edge)^2)_+^(1/(m-1)).
  double edge(double t) const;
  double amplitude(double t) const;

  Kind kind_;
  double t0_ = 0.0;
  double m_ = 2.0;
  double a_ = 0.0;
  double b_ = 1.0;
  BarenblattConstants bb_{};
  ConfinedPorousConstants cp_{};
};

}  // namespace blobflow
