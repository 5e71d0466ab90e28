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
#include <vector>

#include "cogrsf/criteria.hpp"
#include "cogrsf/radar_model.hpp"
#include "cogrsf/sparse_recovery.hpp"

namespace cogrsf {

/// Backtracking parameters for the steepest-descent step.
struct LineSearchConfig {
  double initial_step = 1.0;
  double shrink = 0.5;
  double sufficient_decrease = 1e-4;
  std::size_t max_halvings = 30;
};

struct BatchDesignConfig {
  /// Codes are relaxed to (-delta, 1 + delta) by the arctan substitution.
  double delta = 0.1;
  std::size_t max_iter = 100;
  LineSearchConfig line_search;
  /// Stop once the gradient infinity-norm falls below this.
  double tol = 1e-8;

  void validate() const;
};

struct DesignTrace {
  /// LB2 at the starting point followed by one entry per accepted step.
  std::vector<double> objective_per_iter;
  CodeSequence final_codes;
  std::size_t iterations_used = 0;
  /// LB2 of `final_codes` after clipping (and quantization, if any).
  double final_objective = 0.0;
};

/// z = tan(pi / (1 + 2 delta) * (c - 1/2)); c is clipped to [0, 1] first.
double code_to_z(double code, double delta);

/// c = 1/2 + (1 + 2 delta) / pi * atan(z), in (-delta, 1 + delta).
double z_to_code(double z, double delta);

std::vector<double> z_to_codes(std::span<const double> z, double delta);

/// LB2 evaluated at the relaxed codes z_to_code(z).
double lb2_at(std::span<const double> z, const SupportSet& support, const RangeDopplerGrid& grid,
              const RadarParams& params, double delta);

/// Analytic gradient of tr((A^H A)^2) with respect to z, A = Phi_Lambda / sqrt(N):
/// 4 Re diag(D A^H A A^H) with D(n, l) = dA(n, l) / dz_n.
RVector lb2_gradient(std::span<const double> z, const SupportSet& support,
                     const RangeDopplerGrid& grid, const RadarParams& params, double delta);

/// Steepest descent on LB2 in z-space with Armijo backtracking.
DesignTrace design_batch(const CodeSequence& init_codes, const SupportSet& support,
                         const RangeDopplerGrid& grid, const RadarParams& params,
                         const BatchDesignConfig& config = {});

}  // namespace cogrsf
