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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "cogrsf/radar_model.hpp"

namespace cogrsf {

/// Distinct dictionary column indices, kept sorted ascending.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<std::size_t> indices);
  SupportSet(std::initializer_list<std::size_t> indices)
      : SupportSet(std::vector<std::size_t>(indices)) {}

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t index) const;
  const std::vector<std::size_t>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  /// Throws std::out_of_range if any index is >= `columns`.
  void check_bounds(std::size_t columns) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// The least-squares problem on a candidate support has no unique solution.
class DegenerateSupportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RecoveryResult {
  CVector x_hat;
  SupportSet support;
  double residual_norm = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Least-squares coefficients minimizing ||y - columns * coef||_2.
///
/// Solved by column-pivoted QR; a numerically rank-deficient `columns` raises
/// DegenerateSupportError.
CVector ls_project(const CMatrix& columns, const CVector& y);

/// Columns of `dict` selected by `support`, in support order.
CMatrix select_columns(const CMatrix& dict, const SupportSet& support);

inline constexpr std::size_t kDefaultSpMaxIterations = 50;

/// Subspace Pursuit for a K-sparse x in y = dict * x + w.
///
/// Stops when the support repeats or after `max_iter` passes. Equal-magnitude
/// candidates are ranked by smallest column index.
RecoveryResult subspace_pursuit(const CVector& y, const CMatrix& dict, std::size_t sparsity,
                                std::size_t max_iter = kDefaultSpMaxIterations);

inline RecoveryResult subspace_pursuit(const MeasurementVector& y, const CMatrix& dict,
                                       std::size_t sparsity,
                                       std::size_t max_iter = kDefaultSpMaxIterations) {
  return subspace_pursuit(y.y, dict, sparsity, max_iter);
}

bool exact_support_match(const RecoveryResult& result, const SupportSet& truth);

/// Indices of the `count` largest |values|, ties to the smaller index.
std::vector<std::size_t> largest_magnitudes(const CVector& values, std::size_t count);

}  // namespace cogrsf
