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

#include "cogrsf/sparse_recovery.hpp"

#include <algorithm>
#include <numeric>

namespace cogrsf {

namespace {

// Relative pivot threshold below which QR declares a column dependent.
constexpr double kRankThreshold = 1e-10;

std::vector<std::size_t> merge_sorted(const std::vector<std::size_t>& a,
                                      std::vector<std::size_t> b) {
  std::sort(b.begin(), b.end());
  std::vector<std::size_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SupportSet::SupportSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::invalid_argument("support set contains duplicate indices");
}

bool SupportSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

void SupportSet::check_bounds(std::size_t columns) const {
  if (!indices_.empty() && indices_.back() >= columns)
    throw std::out_of_range("support index out of range");
}

CVector ls_project(const CMatrix& columns, const CVector& y) {
  if (columns.rows() != y.size()) throw std::invalid_argument("ls_project: dimension mismatch");
  if (columns.cols() == 0) return CVector(0);
  if (columns.cols() > columns.rows())
    throw DegenerateSupportError("more candidate columns than measurements");
  Eigen::ColPivHouseholderQR<CMatrix> qr(columns);
  qr.setThreshold(kRankThreshold);
  if (qr.rank() < columns.cols())
    throw DegenerateSupportError("candidate columns are linearly dependent");
  return qr.solve(y);
}

CMatrix select_columns(const CMatrix& dict, const SupportSet& support) {
  support.check_bounds(static_cast<std::size_t>(dict.cols()));
  CMatrix out(dict.rows(), static_cast<Eigen::Index>(support.size()));
  Eigen::Index k = 0;
  for (std::size_t l : support) out.col(k++) = dict.col(static_cast<Eigen::Index>(l));
  return out;
}

std::vector<std::size_t> largest_magnitudes(const CVector& values, std::size_t count) {
  std::vector<std::size_t> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), std::size_t{0});
  count = std::min(count, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      const double ma = std::abs(values[static_cast<Eigen::Index>(a)]);
                      const double mb = std::abs(values[static_cast<Eigen::Index>(b)]);
                      return ma > mb || (ma == mb && a < b);
                    });
  order.resize(count);
  return order;
}

RecoveryResult subspace_pursuit(const CVector& y, const CMatrix& dict, std::size_t sparsity,
                                std::size_t max_iter) {
  const auto rows = static_cast<std::size_t>(dict.rows());
  if (sparsity < 1 || sparsity > rows)
    throw std::invalid_argument("subspace_pursuit: sparsity must satisfy 1 <= K <= N");
  if (static_cast<std::size_t>(dict.cols()) < sparsity)
    throw std::invalid_argument("subspace_pursuit: fewer atoms than K");
  if (max_iter < 1) throw std::invalid_argument("subspace_pursuit: max_iter must be >= 1");
  if (y.size() != dict.rows()) throw std::invalid_argument("subspace_pursuit: dimension mismatch");

  std::vector<std::size_t> support;
  CVector residual = y;
  CVector coef;
  RecoveryResult result;

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    const CVector correlations = dict.adjoint() * residual;
    const auto merged = merge_sorted(support, largest_magnitudes(correlations, sparsity));

    const CMatrix merged_atoms = select_columns(dict, SupportSet(merged));
    const CVector merged_coef = ls_project(merged_atoms, y);
    std::vector<std::size_t> next;
    next.reserve(sparsity);
    for (std::size_t k : largest_magnitudes(merged_coef, sparsity)) next.push_back(merged[k]);
    std::sort(next.begin(), next.end());

    const CMatrix atoms = select_columns(dict, SupportSet(next));
    coef = ls_project(atoms, y);
    residual = y - atoms * coef;

    result.iterations = iter + 1;
    const bool repeated = next == support;
    support = std::move(next);
    if (repeated) {
      result.converged = true;
      break;
    }
  }

  result.x_hat = CVector::Zero(dict.cols());
  for (std::size_t k = 0; k < support.size(); ++k)
    result.x_hat[static_cast<Eigen::Index>(support[k])] = coef[static_cast<Eigen::Index>(k)];
  result.support = SupportSet(std::move(support));
  result.residual_norm = residual.norm();
  return result;
}

bool exact_support_match(const RecoveryResult& result, const SupportSet& truth) {
  return result.support == truth;
}

}  // namespace cogrsf
