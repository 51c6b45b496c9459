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
#include <span>
#include <vector>

namespace blobflow {

// Weighted particle configuration in R^d (d = 1 or 2).
//
// Positions are stored flat, point i occupying coords()[i*d, i*d + d).
// Weights are strictly positive and sum to one. In one dimension the
// positions are strictly increasing; in two dimensions they are pairwise
// distinct. Instances are immutable once built.
class ParticleSystem {
 public:
  // Validates and canonicalizes: in 1D the points are sorted together with
  // their weights, and weights are divided by their sum unless it is already
  // within 1e-12 of one (this keeps build() idempotent bit for bit).
  static ParticleSystem build(int dim, std::vector<double> coords,
                              std::vector<double> weights);
  static ParticleSystem build_1d(std::vector<double> x,
                                 std::vector<double> weights) {
    return build(1, std::move(x), std::move(weights));
  }

  // Same weights, new positions, no reordering. Throws OrderingViolated when
  // a 1D configuration is no longer strictly increasing and
  // CoincidentParticles when two 2D points coincide.
  ParticleSystem with_positions(std::vector<double> coords) const;

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return weights_.size(); }

  std::span<const double> coords() const noexcept { return coords_; }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(coords_).subspan(i * dim_, dim_);
  }
  // First coordinate of particle i; the position itself in 1D.
  double x(std::size_t i) const { return coords_[i * dim_]; }

  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }

  // 1D inter-particle distance with the infinite end convention:
  // gap(0) = gap(N) = +inf and gap(k) = x(k) - x(k-1) otherwise. Particle i
  // sits between gap(i) and gap(i + 1).
  double gap(std::size_t k) const;

  // Smallest distance between two distinct particles.
  double min_separation() const;
  // Extent of the configuration (x_N - x_1 in 1D, bounding-box diagonal in 2D).
  double diameter() const;

  bool operator==(const ParticleSystem&) const = default;

 private:
  ParticleSystem(int dim, std::vector<double> coords, std::vector<double> weights)
      : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)) {}

  int dim_ = 1;
  std::vector<double> coords_;
  std::vector<double> weights_;
};

// Piece centre of the blob density reconstruction.
struct DensityPoint {
  double x;
  double rho;
};

// Blob density of a 1D system: particle i carries a constant piece of height
// w_i / r_i^p over an interval of length r_i^p centred at x_i. Returns the
// ordered polyline through the piece centres.
std::vector<DensityPoint> density_reconstruction(const ParticleSystem& sys,
                                                 double p);

}  // namespace blobflow
