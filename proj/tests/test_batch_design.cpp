/**
 * Copyright 2026 The cogrsf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cogrsf/batch_design.hpp"
#include "cogrsf/criteria.hpp"
#include "test_support.hpp"

namespace cogrsf {
namespace {

using testing::Geometry;

constexpr double kPi = std::numbers::pi;

// LB2 rebuilt from atoms at relaxed codes, independent of the design module.
double lb2_reference(const std::vector<double>& z, const SupportSet& support, const Geometry& g,
                     double delta) {
  const Eigen::Index n = static_cast<Eigen::Index>(z.size());
  CMatrix A(n, static_cast<Eigen::Index>(support.size()));
  Eigen::Index col = 0;
  for (std::size_t l : support) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double c = 0.5 + (1.0 + 2.0 * delta) / kPi * std::atan(z[static_cast<std::size_t>(i)]);
      const double cp = 1.0 + c * g.params.bandwidth_hz / g.params.carrier_hz;
      A(i, col) = std::polar(1.0, g.grid.p(l) * c + g.grid.q(l) * static_cast<double>(i) * cp);
    }
    ++col;
  }
  A /= std::sqrt(static_cast<double>(n));
  const CMatrix G = A.adjoint() * A;
  return G.squaredNorm();
}

// Fourth-order central differences of the reference objective.
RVector fd_gradient(const std::vector<double>& z, const SupportSet& support, const Geometry& g,
                    double delta, double h = 1e-3) {
  RVector fd(static_cast<Eigen::Index>(z.size()));
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto at = [&](double offset) {
      auto shifted = z;
      shifted[i] += offset;
      return lb2_reference(shifted, support, g, delta);
    };
    fd[static_cast<Eigen::Index>(i)] = (at(-2 * h) - 8 * at(-h) + 8 * at(h) - at(2 * h)) / (12 * h);
  }
  return fd;
}

std::vector<double> random_z(std::size_t n, std::mt19937_64& rng, double delta) {
  const auto codes = random_codes(n, rng);
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = code_to_z(codes[i], delta);
  return z;
}

TEST(Reparam, KnownValues) {
  EXPECT_NEAR(code_to_z(0.5, 0.1), 0.0, 1e-15);
  EXPECT_NEAR(code_to_z(1.0, 0.1), std::tan(5.0 * kPi / 12.0), 1e-12);
  EXPECT_NEAR(std::tan(5.0 * kPi / 12.0), 2.0 + std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(z_to_code(1.0, 0.1), 0.8, 1e-15);
  EXPECT_NEAR(z_to_code(0.0, 0.1), 0.5, 1e-15);
  EXPECT_NEAR(z_to_code(1e12, 0.1), 1.1, 1e-9);
  EXPECT_NEAR(z_to_code(-1e12, 0.1), -0.1, 1e-9);
  EXPECT_DOUBLE_EQ(code_to_z(1.7, 0.1), code_to_z(1.0, 0.1));
}

TEST(Reparam, RoundTrip) {
  std::mt19937_64 rng(1);
  for (double delta : {0.01, 0.1, 0.5}) {
    const auto codes = random_codes(200, rng);
    for (std::size_t i = 0; i < codes.size(); ++i)
      EXPECT_NEAR(z_to_code(code_to_z(codes[i], delta), delta), codes[i], 1e-12);
  }
}

TEST(Lb2, MatchesReference) {
  Geometry g;
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 20; ++rep) {
    const auto z = random_z(20, rng, 0.1);
    const auto support = testing::random_support(1 + rep % 6, 80, rng);
    const double ref = lb2_reference(z, support, g, 0.1);
    EXPECT_NEAR(lb2_at(z, support, g.grid, g.params, 0.1), ref, 1e-12 * ref);
  }
}

TEST(Lb2Gradient, MatchesFiniteDifferences) {
  Geometry g;
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const auto z = random_z(20, rng, 0.1);
    const auto support = testing::random_support(2 + rep % 5, 80, rng);
    const RVector grad = lb2_gradient(z, support, g.grid, g.params, 0.1);
    const RVector fd = fd_gradient(z, support, g, 0.1);
    EXPECT_LE((grad - fd).norm() / fd.norm(), 1e-6) << "rep " << rep;
  }
}

TEST(Lb2Gradient, VanishesForSingleColumn) {
  Geometry g;
  std::mt19937_64 rng(4);
  const auto z = random_z(20, rng, 0.1);
  EXPECT_LT(lb2_gradient(z, SupportSet{41}, g.grid, g.params, 0.1).lpNorm<Eigen::Infinity>(), 1e-14);
}

TEST(DesignBatch, MonotoneAndFeasible) {
  Geometry g;
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 5; ++rep) {
    const auto init = random_codes(20, rng);
    const auto support = rep == 0 ? testing::va_support(g.grid) : testing::random_support(4, 80, rng);
    const auto trace = design_batch(init, support, g.grid, g.params);
    ASSERT_FALSE(trace.objective_per_iter.empty());
    EXPECT_EQ(trace.objective_per_iter.size(), trace.iterations_used + 1);
    EXPECT_LE(trace.iterations_used, 100u);
    for (std::size_t i = 1; i < trace.objective_per_iter.size(); ++i)
      EXPECT_LE(trace.objective_per_iter[i], trace.objective_per_iter[i - 1]);
    ASSERT_EQ(trace.final_codes.size(), 20u);
    for (double c : trace.final_codes.values()) {
      EXPECT_GE(c, 0.0);
      EXPECT_LE(c, 1.0);
    }
    const auto sub = sub_dictionary(trace.final_codes.values(), support, g.grid, g.params, true);
    EXPECT_NEAR(trace.final_objective, ls_objective(sub), 1e-10);
    EXPECT_LT(trace.objective_per_iter.back(), trace.objective_per_iter.front());
    EXPECT_GE(trace.final_objective, 4.0 - 1e-9);
  }
}

TEST(DesignBatch, SingleColumnKeepsInit) {
  Geometry g;
  std::mt19937_64 rng(6);
  const auto init = random_codes(20, rng);
  const auto trace = design_batch(init, SupportSet{3}, g.grid, g.params);
  EXPECT_EQ(trace.iterations_used, 0u);
  EXPECT_EQ(trace.objective_per_iter.size(), 1u);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_NEAR(trace.final_codes[i], init[i], 1e-12);
}

TEST(DesignBatch, QuantizedOutput) {
  Geometry g;
  g.params.delta_f_hz = 0.125 * g.params.bandwidth_hz;  // 5 MHz, below 1 / T_p
  std::mt19937_64 rng(7);
  const auto trace = design_batch(random_codes(20, rng), testing::va_support(g.grid), g.grid, g.params);
  for (double c : trace.final_codes.values()) EXPECT_NEAR(c * 8.0, std::round(c * 8.0), 1e-12);
}

TEST(DesignBatch, Deterministic) {
  Geometry g;
  std::mt19937_64 rng(8);
  const auto init = random_codes(20, rng);
  const auto a = design_batch(init, testing::va_support(g.grid), g.grid, g.params);
  const auto b = design_batch(init, testing::va_support(g.grid), g.grid, g.params);
  EXPECT_EQ(a.final_codes, b.final_codes);
  EXPECT_EQ(a.objective_per_iter, b.objective_per_iter);
}

TEST(DesignBatch, RejectsBadConfig) {
  Geometry g;
  std::mt19937_64 rng(9);
  const auto init = random_codes(20, rng);
  BatchDesignConfig cfg;
  cfg.delta = 0.0;
  EXPECT_THROW(design_batch(init, SupportSet{1, 2}, g.grid, g.params, cfg), std::invalid_argument);
  EXPECT_THROW(design_batch(init, SupportSet{}, g.grid, g.params), std::invalid_argument);
}

}  // namespace
}  // namespace cogrsf
