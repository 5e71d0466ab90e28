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
#include <span>
#include <vector>

namespace cogrsf::sim {

/// Outcome of one Monte-Carlo trial.
struct TrialRecord {
  double squared_error = 0.0;  // ||x - x_hat||_2^2
  bool exact_support = false;
};

struct TrialStats {
  double mse = 0.0;
  double exact_support_fraction = 0.0;
  std::size_t n_trials = 0;
};

/// Means over `trials`, accumulated in order. Empty input gives zeros.
TrialStats compute_stats(std::span<const TrialRecord> trials);

/// Spearman rank correlation; tied values share their average rank.
double spearman(std::span<const double> a, std::span<const double> b);

/// 1-based average ranks.
std::vector<double> average_ranks(std::span<const double> values);

}  // namespace cogrsf::sim
