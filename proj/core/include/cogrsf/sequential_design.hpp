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

#include "cogrsf/radar_model.hpp"
#include "cogrsf/sparse_recovery.hpp"

namespace cogrsf {

/// Running Gram matrix of the unscaled sub-dictionary and its inverse.
///
/// Owned by a single design session. `F` is kept in sync with `B` by rank-one
/// updates and rebuilt from scratch whenever ||B F - I||_max exceeds 1e-8.
struct SequentialState {
  CMatrix A_rows;
  CMatrix B;
  CMatrix F;
  std::size_t n_pulses = 0;

  /// State for the given rows (pulses x support columns).
  static SequentialState from_rows(CMatrix rows);
  double inverse_drift() const;
};

inline constexpr double kInverseDriftLimit = 1e-8;

/// State for the pulses already transmitted with `codes`, restricted to `support`.
SequentialState make_sequential_state(const CodeSequence& codes, const SupportSet& support,
                                      const RangeDopplerGrid& grid, const RadarParams& params);

enum class SequentialMode {
  /// Exact rank-one CRB reduction, maximized.
  kCrb = 1,
  /// Quadratic-form approximation a^H B a, minimized.
  kQuadratic = 2,
};

/// Sub-dictionary row contributed by a pulse with code `code` at index `pulse_index`.
Eigen::RowVectorXcd candidate_row(double code, const SupportSet& support,
                                  const RangeDopplerGrid& grid, const RadarParams& params,
                                  std::size_t pulse_index);

/// a^H F^2 a / (1 + a^H F a), with a = row^H.
double objective_mode1(const Eigen::RowVectorXcd& row, const CMatrix& F);

/// a^H B a, with a = row^H.
double objective_mode2(const Eigen::RowVectorXcd& row, const CMatrix& B);

inline constexpr std::size_t kDefaultCandidates = 1024;

/// Best next code over the grid {i / (n_candidates - 1)}. Values within a
/// relative 1e-12 of the incumbent count as ties and keep the smaller code.
double design_next_code(const SequentialState& state, SequentialMode mode,
                        const SupportSet& support, const RangeDopplerGrid& grid,
                        const RadarParams& params, std::size_t n_candidates = kDefaultCandidates);

/// Appends `row`: B += a a^H, F by Sherman-Morrison.
SequentialState update_state(SequentialState state, const Eigen::RowVectorXcd& row);

}  // namespace cogrsf
