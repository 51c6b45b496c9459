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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "blobflow/error.hpp"
#include "blobflow/softmin.hpp"

namespace blobflow {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> random_vector(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(2, 8);
  std::uniform_real_distribution<double> logx(std::log(1e-3), std::log(1e3));
  std::vector<double> x(size(rng));
  for (auto& v : x) v = std::exp(logx(rng));
  return x;
}

TEST(Softmin, EqualEntriesGiveTheEntry) {
  for (double p : {0.5, 1.0, 10.0, 1000.0}) {
    EXPECT_DOUBLE_EQ(softmin(std::vector<double>{2.5, 2.5}, p), 2.5);
  }
}

TEST(Softmin, TwoEntriesAtPOne) {
  EXPECT_DOUBLE_EQ(softmin(std::vector<double>{1.0, 2.0}, 1.0), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(softmin_pair(1.0, 2.0, 1.0), 4.0 / 3.0);
}

TEST(Softmin, InfiniteEntryContributesNothing) {
  EXPECT_DOUBLE_EQ(softmin(std::vector<double>{1.0, kInf}, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(softmin_pair(kInf, 0.5, 10.0), std::pow(2.0, 0.1) * 0.5);
}

TEST(Softmin, RejectsBadInput) {
  const auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigError;
  };
  EXPECT_EQ(code([] { softmin(std::vector<double>{1.0, 0.0}, 1.0); }),
            ErrorCode::NonpositiveInput);
  EXPECT_EQ(code([] { softmin(std::vector<double>{1.0, -2.0}, 1.0); }),
            ErrorCode::NonpositiveInput);
  EXPECT_EQ(code([] { softmin(std::vector<double>{kInf, kInf}, 1.0); }),
            ErrorCode::AllInfinite);
  EXPECT_EQ(code([] { softmin(std::vector<double>{1.0}, 1.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code([] { softmin(std::vector<double>{1.0, 2.0}, 0.0); }),
            ErrorCode::InvalidArgument);
}

TEST(SoftminGradient, Examples) {
  const auto g = softmin_gradient(std::vector<double>{3.0, 3.0}, 7.0);
  EXPECT_DOUBLE_EQ(g[0], 0.5);
  EXPECT_DOUBLE_EQ(g[1], 0.5);

  for (double p : {1.0, 4.0, 10.0}) {
    const auto gi = softmin_gradient(std::vector<double>{1.0, kInf}, p);
    EXPECT_NEAR(gi[0], std::pow(2.0, 1.0 / p), 1e-14);
    EXPECT_EQ(gi[1], 0.0);
  }
}

TEST(SoftminGradient, PairMatchesGeneral) {
  const auto pair = softmin_pair_with_gradient(0.3, 0.7, 10.0);
  const auto g = softmin_gradient(std::vector<double>{0.3, 0.7}, 10.0);
  EXPECT_NEAR(pair.value, softmin(std::vector<double>{0.3, 0.7}, 10.0), 1e-15);
  EXPECT_NEAR(pair.d_a, g[0], 1e-15);
  EXPECT_NEAR(pair.d_b, g[1], 1e-15);
}

// Euler's relation for a degree-1 homogeneous function.
TEST(SoftminProperty, EulerIdentity) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_vector(rng);
    for (double p : {1.0, 2.0, 10.0, 100.0}) {
      const auto g = softmin_gradient(x, p);
      double s = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * g[k];
      EXPECT_NEAR(s, softmin(x, p), 1e-12 * softmin(x, p));
    }
  }
}

TEST(SoftminProperty, HomogeneousOfDegreeOne) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> lam(0.01, 100.0);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_vector(rng);
    const double l = lam(rng);
    const double base = softmin(x, 10.0);
    for (auto& v : x) v *= l;
    EXPECT_NEAR(softmin(x, 10.0), l * base, 1e-13 * l * base);
  }
}

TEST(SoftminProperty, BoundsAndMonotoneInP) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_vector(rng);
    const double mn = *std::min_element(x.begin(), x.end());
    const double s = static_cast<double>(x.size());
    double prev = kInf;
    for (double p : {1.0, 1.5, 2.0, 5.0, 10.0, 100.0}) {
      const double v = softmin(x, p);
      EXPECT_GE(v, mn);
      EXPECT_LE(v, std::pow(s, 1.0 / p) * mn);
      EXPECT_LE(v, prev);
      prev = v;
    }
  }
}

TEST(SoftminProperty, LimitAtLargeP) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_vector(rng);
    const double mn = *std::min_element(x.begin(), x.end());
    const double p = 1e4;
    const double s = static_cast<double>(x.size());
    EXPECT_LE(std::abs(softmin(x, p) - mn), mn * (std::pow(s, 1.0 / p) - 1.0) * (1 + 1e-9));
  }
}

TEST(SoftminProperty, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_vector(rng);
    const double h = 1e-6 * *std::min_element(x.begin(), x.end());
    for (double p : {1.0, 2.0, 10.0}) {
      const auto g = softmin_gradient(x, p);
      for (std::size_t k = 0; k < x.size(); ++k) {
        auto xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        const double fd = (softmin(xp, p) - softmin(xm, p)) / (2 * h);
        EXPECT_NEAR(fd, g[k], 1e-6 * std::max(std::abs(g[k]), 1e-2));
      }
    }
  }
}

}  // namespace
}  // namespace blobflow
