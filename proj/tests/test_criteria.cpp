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
#include <limits>

#include "cogrsf/criteria.hpp"
#include "test_support.hpp"

namespace cogrsf {
namespace {

using testing::Geometry;

// A (N x 2) whose Gram matrix is [[1, rho], [conj(rho), 1]].
CMatrix two_column(Complex rho, Eigen::Index n = 20) {
  CMatrix A = CMatrix::Zero(n, 2);
  A(0, 0) = 1.0;
  A(0, 1) = rho;  // column 1 = rho e0 + sqrt(1-|rho|^2) e1
  A(1, 1) = std::sqrt(1.0 - std::norm(rho));
  return A;
}

double inverse_trace_lu(const CMatrix& G) { return G.inverse().trace().real(); }

TEST(Criteria, TwoByTwoClosedForms) {
  for (double mag : {0.0, 0.25, 0.5, 0.9}) {
    for (double phase : {0.0, 1.3, -2.2}) {
      const SubDictionary sub{two_column(std::polar(mag, phase)), true};
      EXPECT_NEAR(crb_objective(sub), 2.0 / (1.0 - mag * mag), 1e-9);
      EXPECT_NEAR(ls_objective(sub), 2.0 + 2.0 * mag * mag, 1e-9);
    }
  }
  const SubDictionary half{two_column(0.5), true};
  EXPECT_NEAR(crb_objective(half), 8.0 / 3.0, 1e-12);
  EXPECT_NEAR(ls_objective(half), 2.5, 1e-12);
}

TEST(Criteria, SingleColumnIsOne) {
  Geometry g;
  std::mt19937_64 rng(1);
  const auto codes = random_codes(20, rng);
  const auto sub = sub_dictionary(codes.values(), SupportSet{33}, g.grid, g.params, true);
  EXPECT_NEAR(crb_objective(sub), 1.0, 1e-12);
  EXPECT_NEAR(ls_objective(sub), 1.0, 1e-12);
}

TEST(Criteria, SingularIsInfinite) {
  CMatrix A(20, 2);
  A.col(0) = CVector::Ones(20) / std::sqrt(20.0);
  A.col(1) = A.col(0);
  const SubDictionary sub{A, true};
  EXPECT_EQ(crb_objective(sub), std::numeric_limits<double>::infinity());
  EXPECT_NEAR(ls_objective(sub), 4.0, 1e-12);
  EXPECT_THROW(sub_dictionary(A, SupportSet{}, true), std::invalid_argument);
}

TEST(Criteria, AgreeWithIndependentOracles) {
  Geometry g;
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t k = 1 + rep % 8;
    const auto codes = random_codes(20, rng);
    const auto support = testing::random_support(k, 80, rng);
    const auto sub = sub_dictionary(codes.values(), support, g.grid, g.params, true);
    const CMatrix G = sub.gram();
    EXPECT_NEAR(G.trace().real(), static_cast<double>(k), 1e-10);
    EXPECT_LT((G.diagonal().array() - 1.0).abs().maxCoeff(), 1e-12);

    const double lb = crb_objective(sub);
    const double lb2 = ls_objective(sub);
    EXPECT_NEAR(lb, inverse_trace_lu(G), 1e-8 * lb);
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<CMatrix>(G).eigenvalues();
    EXPECT_NEAR(lb2, ev.squaredNorm(), 1e-10 * lb2);
    EXPECT_NEAR(lb2, (G * G).trace().real(), 1e-10 * lb2);
    EXPECT_GE(lb, static_cast<double>(k) - 1e-9);
    EXPECT_GE(lb2, static_cast<double>(k) - 1e-9);
  }
}

TEST(Criteria, DictionaryAndCodePathsAgree) {
  Geometry g;
  std::mt19937_64 rng(3);
  const auto codes = random_codes(20, rng);
  const SupportSet support = testing::va_support(g.grid);
  const auto a = sub_dictionary(build_dictionary(g.grid, codes, g.params), support, true);
  const auto b = sub_dictionary(codes.values(), support, g.grid, g.params, true);
  EXPECT_LT((a.A - b.A).cwiseAbs().maxCoeff(), 1e-14);
  const auto raw = sub_dictionary(codes.values(), support, g.grid, g.params, false);
  EXPECT_LT((raw.A / std::sqrt(20.0) - b.A).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Criteria, ColumnOrderAndUnitaryInvariance) {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 30; ++rep) {
    CMatrix A = testing::random_complex(20, 4, rng) / std::sqrt(20.0);
    const SubDictionary sub{A, true};
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(4);
    perm.indices() << 2, 0, 3, 1;
    const SubDictionary reordered{A * perm, true};
    const SubDictionary rotated{testing::random_unitary(20, rng) * A, true};
    EXPECT_NEAR(crb_objective(sub), crb_objective(reordered), 1e-9 * crb_objective(sub));
    EXPECT_NEAR(ls_objective(sub), ls_objective(reordered), 1e-10 * ls_objective(sub));
    EXPECT_NEAR(crb_objective(sub), crb_objective(rotated), 1e-9 * crb_objective(sub));
    EXPECT_NEAR(ls_objective(sub), ls_objective(rotated), 1e-10 * ls_objective(sub));
  }
}

TEST(Criteria, MseBoundScaling) {
  Geometry g;
  std::mt19937_64 rng(5);
  const auto codes = random_codes(20, rng);
  const SupportSet support = testing::va_support(g.grid);
  const auto norm = sub_dictionary(codes.values(), support, g.grid, g.params, true);
  const auto raw = sub_dictionary(codes.values(), support, g.grid, g.params, false);
  const double direct = inverse_trace_lu(raw.A.adjoint() * raw.A);
  EXPECT_NEAR(crb_mse_bound(raw, 0.3), 0.3 * direct, 1e-10 * direct);
  EXPECT_NEAR(crb_mse_bound(norm, 0.3), 0.3 * direct, 1e-10 * direct);
  EXPECT_NEAR(crb_mse_bound(norm, 0.3), 0.3 * crb_objective(norm) / 20.0, 1e-10 * direct);
  EXPECT_EQ(crb_mse_bound(norm, 0.0), 0.0);
}

}  // namespace
}  // namespace cogrsf
