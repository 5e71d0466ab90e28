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

#include "cogrsf/sequential_design.hpp"

#include <cmath>

namespace cogrsf {

namespace {

constexpr double kTieTolerance = 1e-12;

CMatrix invert_hermitian(const CMatrix& B) {
  if (B.size() == 0) return B;
  return B.ldlt().solve(CMatrix::Identity(B.rows(), B.cols()));
}

}  // namespace

SequentialState SequentialState::from_rows(CMatrix rows) {
  SequentialState state;
  state.n_pulses = static_cast<std::size_t>(rows.rows());
  state.B = rows.adjoint() * rows;
  state.F = invert_hermitian(state.B);
  state.A_rows = std::move(rows);
  return state;
}

double SequentialState::inverse_drift() const {
  if (B.size() == 0) return 0.0;
  return (B * F - CMatrix::Identity(B.rows(), B.cols())).cwiseAbs().maxCoeff();
}

SequentialState make_sequential_state(const CodeSequence& codes, const SupportSet& support,
                                      const RangeDopplerGrid& grid, const RadarParams& params) {
  support.check_bounds(grid.size());
  return SequentialState::from_rows(
      dictionary_columns(codes.values(), support.indices(), grid, params));
}

Eigen::RowVectorXcd candidate_row(double code, const SupportSet& support,
                                  const RangeDopplerGrid& grid, const RadarParams& params,
                                  std::size_t pulse_index) {
  const double factor = code_factor(code, params);
  const double n = static_cast<double>(pulse_index);
  Eigen::RowVectorXcd row(static_cast<Eigen::Index>(support.size()));
  Eigen::Index k = 0;
  for (std::size_t l : support) row[k++] = std::polar(1.0, grid.p(l) * code + grid.q(l) * n * factor);
  return row;
}

double objective_mode1(const Eigen::RowVectorXcd& row, const CMatrix& F) {
  const CVector a = row.adjoint();
  const CVector Fa = F * a;
  const double numerator = Fa.squaredNorm();  // a^H F^2 a for Hermitian F
  const double denominator = 1.0 + a.dot(Fa).real();
  return numerator / denominator;
}

double objective_mode2(const Eigen::RowVectorXcd& row, const CMatrix& B) {
  const CVector a = row.adjoint();
  return a.dot(B * a).real();
}

double design_next_code(const SequentialState& state, SequentialMode mode,
                        const SupportSet& support, const RangeDopplerGrid& grid,
                        const RadarParams& params, std::size_t n_candidates) {
  if (n_candidates < 2) throw std::invalid_argument("design_next_code: need >= 2 candidates");
  if (static_cast<Eigen::Index>(support.size()) != state.B.rows())
    throw std::invalid_argument("design_next_code: support does not match state");

  const double sign = mode == SequentialMode::kCrb ? 1.0 : -1.0;  // maximize sign * objective
  double best_code = 0.0;
  double best_value = 0.0;
  for (std::size_t i = 0; i < n_candidates; ++i) {
    const double c = static_cast<double>(i) / static_cast<double>(n_candidates - 1);
    const auto row = candidate_row(c, support, grid, params, state.n_pulses);
    const double value = sign * (mode == SequentialMode::kCrb ? objective_mode1(row, state.F)
                                                              : objective_mode2(row, state.B));
    if (i == 0 || value > best_value + kTieTolerance * std::max(1.0, std::abs(best_value))) {
      best_code = c;
      best_value = value;
    }
  }
  return best_code;
}

SequentialState update_state(SequentialState state, const Eigen::RowVectorXcd& row) {
  const CVector a = row.adjoint();
  state.B += a * a.adjoint();
  const CVector Fa = state.F * a;
  const double denominator = 1.0 + a.dot(Fa).real();
  state.F -= (Fa * Fa.adjoint()) / denominator;

  state.A_rows.conservativeResize(state.A_rows.rows() + 1, Eigen::NoChange);
  state.A_rows.row(state.A_rows.rows() - 1) = row;
  ++state.n_pulses;

  if (state.inverse_drift() > kInverseDriftLimit) state.F = invert_hermitian(state.B);
  return state;
}

}  // namespace cogrsf
