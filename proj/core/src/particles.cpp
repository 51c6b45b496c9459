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

#include "blobflow/particles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "blobflow/error.hpp"
#include "blobflow/softmin.hpp"

namespace blobflow {
namespace {

constexpr double kWeightSumTolerance = 1e-12;

void check_finite(std::span<const double> coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::InvalidArgument, "non-finite particle coordinate");
    }
  }
}

// Index of a repeated 2D point, or size() when all points are distinct.
std::size_t find_duplicate_2d(std::span<const double> coords) {
  const std::size_t n = coords.size() / 2;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(coords[2 * a], coords[2 * a + 1]) <
           std::pair(coords[2 * b], coords[2 * b + 1]);
  });
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t a = order[k - 1], b = order[k];
    if (coords[2 * a] == coords[2 * b] && coords[2 * a + 1] == coords[2 * b + 1]) {
      return b;
    }
  }
  return n;
}

}  // namespace

ParticleSystem ParticleSystem::build(int dim, std::vector<double> coords,
                                     std::vector<double> weights) {
  if (dim != 1 && dim != 2) {
    throw Error(ErrorCode::InvalidArgument,
                "dimension must be 1 or 2, got " + std::to_string(dim));
  }
  const std::size_t n = weights.size();
  if (coords.size() != n * static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::InvalidArgument,
                "position and weight counts do not match");
  }
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "at least two particles required");
  }
  check_finite(coords);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw Error(ErrorCode::NonpositiveWeight,
                  "weight " + std::to_string(i) + " is not a positive number");
    }
  }

  if (dim == 1) {
    if (!std::is_sorted(coords.begin(), coords.end())) {
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return coords[a] < coords[b];
      });
      std::vector<double> xs(n), ws(n);
      for (std::size_t k = 0; k < n; ++k) {
        xs[k] = coords[order[k]];
        ws[k] = weights[order[k]];
      }
      coords = std::move(xs);
      weights = std::move(ws);
    }
    for (std::size_t k = 1; k < n; ++k) {
      if (coords[k] == coords[k - 1]) {
        throw Error(ErrorCode::DuplicatePosition,
                    "two particles at x = " + std::to_string(coords[k]));
      }
    }
  } else if (find_duplicate_2d(coords) != n) {
    throw Error(ErrorCode::DuplicatePosition, "two particles share a position");
  }

  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    for (double& w : weights) w /= total;
  }
  return ParticleSystem(dim, std::move(coords), std::move(weights));
}

ParticleSystem ParticleSystem::with_positions(std::vector<double> coords) const {
  if (coords.size() != coords_.size()) {
    throw Error(ErrorCode::InvalidArgument, "coordinate count changed");
  }
  check_finite(coords);
  if (dim_ == 1) {
    for (std::size_t k = 1; k < coords.size(); ++k) {
      if (!(coords[k] > coords[k - 1])) {
        throw Error(ErrorCode::OrderingViolated,
                    "particles " + std::to_string(k - 1) + " and " +
                        std::to_string(k) + " crossed or collided");
      }
    }
  } else if (find_duplicate_2d(coords) != size()) {
    throw Error(ErrorCode::CoincidentParticles, "two particles collided");
  }
  return ParticleSystem(dim_, std::move(coords), weights_);
}

double ParticleSystem::gap(std::size_t k) const {
  if (k == 0 || k >= size()) return std::numeric_limits<double>::infinity();
  return coords_[k] - coords_[k - 1];
}

double ParticleSystem::min_separation() const {
  double best = std::numeric_limits<double>::infinity();
  if (dim_ == 1) {
    for (std::size_t k = 1; k < size(); ++k) best = std::min(best, gap(k));
    return best;
  }
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      const double dx = coords_[2 * i] - coords_[2 * j];
      const double dy = coords_[2 * i + 1] - coords_[2 * j + 1];
      best = std::min(best, std::hypot(dx, dy));
    }
  }
  return best;
}

double ParticleSystem::diameter() const {
  if (dim_ == 1) return coords_.back() - coords_.front();
  double lo[2] = {coords_[0], coords_[1]};
  double hi[2] = {coords_[0], coords_[1]};
  for (std::size_t i = 1; i < size(); ++i) {
    for (int a = 0; a < 2; ++a) {
      lo[a] = std::min(lo[a], coords_[2 * i + a]);
      hi[a] = std::max(hi[a], coords_[2 * i + a]);
    }
  }
  return std::hypot(hi[0] - lo[0], hi[1] - lo[1]);
}

std::vector<DensityPoint> density_reconstruction(const ParticleSystem& sys,
                                                 double p) {
  if (sys.dim() != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "density reconstruction is defined for 1D systems");
  }
  std::vector<DensityPoint> out;
  out.reserve(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const double length = softmin_pair(sys.gap(i), sys.gap(i + 1), p);
    out.push_back({sys.x(i), sys.weight(i) / length});
  }
  return out;
}

}  // namespace blobflow
