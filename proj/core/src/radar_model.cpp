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

#include "cogrsf/radar_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cogrsf {

namespace {

constexpr double kOnGridTolerance = 1e-9;

std::size_t snap_to_cell(double value, double step, std::size_t count) {
  if (step == 0.0) {
    if (std::abs(value) > kOnGridTolerance) throw OffGridError("target off grid");
    return 0;
  }
  const double ratio = value / step;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) > kOnGridTolerance || nearest < 0.0 ||
      nearest >= static_cast<double>(count)) {
    throw OffGridError("target off grid: " + std::to_string(value) + " is not a multiple of " +
                       std::to_string(step) + " in range");
  }
  return static_cast<std::size_t>(nearest);
}

}  // namespace

void RadarParams::validate() const {
  if (!(carrier_hz > 0.0)) throw std::invalid_argument("carrier frequency must be positive");
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  if (!(pulse_width_s > 0.0) || !(pulse_width_s <= pri_s))
    throw std::invalid_argument("pulse width must satisfy 0 < T_p <= T");
  if (n_pulses < 1) throw std::invalid_argument("at least one pulse per CPI is required");
  if (!(delta_f_hz >= 0.0)) throw std::invalid_argument("frequency step must be non-negative");
  if (delta_f_hz > 0.0 && !(delta_f_hz < 1.0 / pulse_width_s))
    throw std::invalid_argument("frequency step must be below 1/T_p");
}

RangeDopplerGrid::RangeDopplerGrid(std::size_t range_cells, std::size_t doppler_cells,
                                   double delta_p, double delta_q)
    : range_cells_(range_cells), doppler_cells_(doppler_cells), delta_p_(delta_p),
      delta_q_(delta_q) {
  if (range_cells == 0 || doppler_cells == 0)
    throw std::invalid_argument("grid needs at least one range and one Doppler cell");
}

std::size_t RangeDopplerGrid::index(std::size_t m, std::size_t n) const {
  if (m >= range_cells_ || n >= doppler_cells_) throw std::out_of_range("grid cell out of range");
  return m * doppler_cells_ + n;
}

double RangeDopplerGrid::p(std::size_t l) const {
  if (l >= size()) throw std::out_of_range("grid index out of range");
  return static_cast<double>(range_index(l)) * delta_p_;
}

double RangeDopplerGrid::q(std::size_t l) const {
  if (l >= size()) throw std::out_of_range("grid index out of range");
  return static_cast<double>(doppler_index(l)) * delta_q_;
}

std::size_t RangeDopplerGrid::locate(double p, double q) const {
  const std::size_t m = snap_to_cell(p, delta_p_, range_cells_);
  const std::size_t n = snap_to_cell(q, delta_q_, doppler_cells_);
  return index(m, n);
}

RangeDopplerGrid make_grid(const RadarParams& params, std::size_t range_cells,
                           std::size_t doppler_cells) {
  if (range_cells == 0 || doppler_cells == 0)
    throw std::invalid_argument("grid needs at least one range and one Doppler cell");
  const double two_pi = 2.0 * std::numbers::pi;
  return RangeDopplerGrid(range_cells, doppler_cells,
                          two_pi * params.range_cells_per_bin() / static_cast<double>(range_cells),
                          two_pi / static_cast<double>(doppler_cells));
}

CodeSequence::CodeSequence(std::vector<double> codes) : codes_(std::move(codes)) {
  for (double c : codes_) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("code outside [0, 1]");
  }
}

void CodeSequence::push_back(double code) {
  if (!(code >= 0.0 && code <= 1.0)) throw std::invalid_argument("code outside [0, 1]");
  codes_.push_back(code);
}

double code_factor(double code, const RadarParams& params) {
  return 1.0 + code * params.bandwidth_hz / params.carrier_hz;
}

CMatrix dictionary_columns(std::span<const double> codes, std::span<const std::size_t> columns,
                           const RangeDopplerGrid& grid, const RadarParams& params) {
  const auto rows = static_cast<Eigen::Index>(codes.size());
  CMatrix out(rows, static_cast<Eigen::Index>(columns.size()));
  for (Eigen::Index k = 0; k < out.cols(); ++k) {
    const std::size_t l = columns[static_cast<std::size_t>(k)];
    const double p = grid.p(l);
    const double q = grid.q(l);
    for (Eigen::Index n = 0; n < rows; ++n) {
      const double c = codes[static_cast<std::size_t>(n)];
      const double phase = p * c + q * static_cast<double>(n) * code_factor(c, params);
      out(n, k) = std::polar(1.0, phase);
    }
  }
  return out;
}

CVector atom(std::size_t l, const RangeDopplerGrid& grid, const CodeSequence& codes,
             const RadarParams& params) {
  if (l >= grid.size()) throw std::out_of_range("atom index out of range");
  const std::size_t column[] = {l};
  return dictionary_columns(codes.values(), column, grid, params).col(0);
}

CMatrix build_dictionary(const RangeDopplerGrid& grid, const CodeSequence& codes,
                         const RadarParams& params) {
  std::vector<std::size_t> all(grid.size());
  for (std::size_t l = 0; l < all.size(); ++l) all[l] = l;
  return dictionary_columns(codes.values(), all, grid, params);
}

std::vector<std::size_t> scene_cells(const TargetScene& scene, const RangeDopplerGrid& grid) {
  std::vector<std::size_t> cells;
  cells.reserve(scene.size());
  for (const auto& t : scene.targets) cells.push_back(grid.locate(t.p, t.q));
  return cells;
}

CVector scene_to_sparse_vector(const TargetScene& scene, const RangeDopplerGrid& grid) {
  CVector x = CVector::Zero(static_cast<Eigen::Index>(grid.size()));
  std::vector<bool> used(grid.size(), false);
  const auto cells = scene_cells(scene, grid);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (used[cells[k]]) throw std::invalid_argument("two targets share a grid cell");
    used[cells[k]] = true;
    x[static_cast<Eigen::Index>(cells[k])] = scene.targets[k].gamma;
  }
  return x;
}

CVector synthesize_echo(const TargetScene& scene, const CodeSequence& codes,
                        const RangeDopplerGrid& grid, const RadarParams& params) {
  const auto cells = scene_cells(scene, grid);
  const CMatrix atoms = dictionary_columns(codes.values(), cells, grid, params);
  CVector gammas(static_cast<Eigen::Index>(cells.size()));
  for (std::size_t k = 0; k < cells.size(); ++k)
    gammas[static_cast<Eigen::Index>(k)] = scene.targets[k].gamma;
  if (cells.empty()) return CVector::Zero(static_cast<Eigen::Index>(codes.size()));
  return atoms * gammas;
}

double quantize_code(double code, const RadarParams& params) {
  if (params.delta_f_hz <= 0.0) return code;
  const double step = params.delta_f_hz / params.bandwidth_hz;
  const double max_d = std::floor(params.bandwidth_hz / params.delta_f_hz);
  const double d = std::clamp(std::round(code / step), 0.0, max_d);
  return std::clamp(d * step, 0.0, 1.0);
}

CodeSequence quantize_codes(const CodeSequence& codes, const RadarParams& params) {
  if (params.delta_f_hz <= 0.0) return codes;
  std::vector<double> out(codes.values().begin(), codes.values().end());
  for (auto& c : out) c = quantize_code(c, params);
  return CodeSequence(std::move(out));
}

double sigma2_from_snr_db(double snr_db, double gamma_abs, std::size_t n_pulses) {
  return gamma_abs * gamma_abs /
         (static_cast<double>(n_pulses) * std::pow(10.0, snr_db / 10.0));
}

}  // namespace cogrsf
