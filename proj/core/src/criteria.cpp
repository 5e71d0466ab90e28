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

#include "cogrsf/criteria.hpp"

#include <cmath>
#include <limits>

namespace cogrsf {

namespace {

constexpr double kSingularRatio = 1e-12;

double inverse_trace(const CMatrix& gram) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram, Eigen::EigenvaluesOnly);
  const RVector& lambda = eig.eigenvalues();
  const double trace = gram.trace().real();
  if (lambda.size() == 0) return 0.0;
  if (!(lambda.minCoeff() >= kSingularRatio * trace)) return std::numeric_limits<double>::infinity();
  return lambda.cwiseInverse().sum();
}

}  // namespace

SubDictionary sub_dictionary(const CMatrix& dict, const SupportSet& support, bool normalized) {
  if (support.empty()) throw std::invalid_argument("sub_dictionary: empty support");
  SubDictionary sub{select_columns(dict, support), normalized};
  if (normalized) sub.A /= std::sqrt(static_cast<double>(dict.rows()));
  return sub;
}

SubDictionary sub_dictionary(std::span<const double> codes, const SupportSet& support,
                             const RangeDopplerGrid& grid, const RadarParams& params,
                             bool normalized) {
  if (support.empty()) throw std::invalid_argument("sub_dictionary: empty support");
  support.check_bounds(grid.size());
  SubDictionary sub{dictionary_columns(codes, support.indices(), grid, params), normalized};
  if (normalized) sub.A /= std::sqrt(static_cast<double>(codes.size()));
  return sub;
}

double crb_objective(const SubDictionary& sub) { return inverse_trace(sub.gram()); }

double ls_objective(const SubDictionary& sub) { return sub.gram().squaredNorm(); }

double crb_mse_bound(const SubDictionary& sub, double sigma2) {
  if (sigma2 == 0.0) return 0.0;
  const double rows = static_cast<double>(sub.A.rows());
  // (Phi^H Phi)^{-1} = (A^H A)^{-1} / N when A is the scaled form.
  const double trace = inverse_trace(sub.gram());
  return sub.normalized ? sigma2 * trace / rows : sigma2 * trace;
}

}  // namespace cogrsf
