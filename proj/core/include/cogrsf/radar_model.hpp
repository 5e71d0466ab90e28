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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace cogrsf {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Radar constants for one coherent processing interval.
///
/// `delta_f == 0` means the synthesizer is treated as continuous and codes are
/// never quantized. A positive step must stay below `1 / pulse_width` or the
/// synthesized profile folds onto itself (ghost images).
struct RadarParams {
  double carrier_hz = 10e9;
  double bandwidth_hz = 40e6;
  double pri_s = 100e-6;
  double pulse_width_s = 0.1e-6;
  std::size_t n_pulses = 20;
  double delta_f_hz = 0.0;

  /// Throws std::invalid_argument when any invariant is violated.
  void validate() const;

  /// B * T_p, the number of range-resolution cells in one coarse bin.
  double range_cells_per_bin() const { return bandwidth_hz * pulse_width_s; }
};

/// Thrown when a target does not coincide with a grid cell.
class OffGridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Discretized (range-phase, Doppler-phase) pairs. Column `l = m * Q + n` holds
/// `p = m * delta_p`, `q = n * delta_q`.
class RangeDopplerGrid {
 public:
  RangeDopplerGrid(std::size_t range_cells, std::size_t doppler_cells, double delta_p,
                   double delta_q);

  std::size_t range_cells() const { return range_cells_; }
  std::size_t doppler_cells() const { return doppler_cells_; }
  std::size_t size() const { return range_cells_ * doppler_cells_; }
  double delta_p() const { return delta_p_; }
  double delta_q() const { return delta_q_; }

  std::size_t index(std::size_t m, std::size_t n) const;
  std::size_t range_index(std::size_t l) const { return l / doppler_cells_; }
  std::size_t doppler_index(std::size_t l) const { return l % doppler_cells_; }
  double p(std::size_t l) const;
  double q(std::size_t l) const;

  /// Column index of the cell at (p, q); throws OffGridError if none matches.
  std::size_t locate(double p, double q) const;

 private:
  std::size_t range_cells_;
  std::size_t doppler_cells_;
  double delta_p_;
  double delta_q_;
};

/// delta_p = 2*pi*B*T_p / P (P cells across one coarse bin), delta_q = 2*pi / Q.
RangeDopplerGrid make_grid(const RadarParams& params, std::size_t range_cells,
                           std::size_t doppler_cells);

/// Per-pulse frequency-modulation codes, each in [0, 1].
class CodeSequence {
 public:
  CodeSequence() = default;
  explicit CodeSequence(std::vector<double> codes);

  std::size_t size() const { return codes_.size(); }
  double operator[](std::size_t n) const { return codes_[n]; }
  std::span<const double> values() const { return codes_; }

  void push_back(double code);

  friend bool operator==(const CodeSequence&, const CodeSequence&) = default;

 private:
  std::vector<double> codes_;
};

/// Draws `count` codes i.i.d. uniform on [0, 1].
template <class Urbg>
CodeSequence random_codes(std::size_t count, Urbg& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> codes(count);
  for (auto& c : codes) c = unit(rng);
  return CodeSequence(std::move(codes));
}

struct Target {
  Complex gamma{1.0, 0.0};
  double p = 0.0;
  double q = 0.0;
};

struct TargetScene {
  std::vector<Target> targets;

  std::size_t size() const { return targets.size(); }
};

struct MeasurementVector {
  CVector y;
  double sigma2 = 0.0;
};

/// c'_n = 1 + c_n * B / f_c.
double code_factor(double code, const RadarParams& params);

/// Column `l` of the dictionary: element n is exp(j (p_l c_n + q_l n c'_n)).
CVector atom(std::size_t l, const RangeDopplerGrid& grid, const CodeSequence& codes,
             const RadarParams& params);

/// Full N x PQ dictionary.
CMatrix build_dictionary(const RangeDopplerGrid& grid, const CodeSequence& codes,
                         const RadarParams& params);

/// Columns of the dictionary restricted to `columns`, built from raw codes.
///
/// Unlike `build_dictionary` the codes are not range-checked, so relaxed codes
/// outside [0, 1] (used during batch optimization) are accepted.
CMatrix dictionary_columns(std::span<const double> codes, std::span<const std::size_t> columns,
                           const RangeDopplerGrid& grid, const RadarParams& params);

/// Grid column of every target, in scene order. Throws OffGridError.
std::vector<std::size_t> scene_cells(const TargetScene& scene, const RangeDopplerGrid& grid);

/// Gridded K-sparse coefficient vector; throws std::invalid_argument on a shared cell.
CVector scene_to_sparse_vector(const TargetScene& scene, const RangeDopplerGrid& grid);

/// Noise-free echo: sum over targets of gamma_k * atom(l_k).
CVector synthesize_echo(const TargetScene& scene, const CodeSequence& codes,
                        const RangeDopplerGrid& grid, const RadarParams& params);

/// Circularly-symmetric complex Gaussian noise, real and imaginary parts each
/// with variance sigma2 / 2.
template <class Urbg>
MeasurementVector add_noise(const CVector& clean, double sigma2, Urbg& rng) {
  if (!(sigma2 >= 0.0)) throw std::invalid_argument("add_noise: sigma2 must be non-negative");
  MeasurementVector out{clean, sigma2};
  if (sigma2 == 0.0) return out;
  std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2 / 2.0));
  for (Eigen::Index n = 0; n < out.y.size(); ++n) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    out.y[n] += Complex(re, im);
  }
  return out;
}

/// Snaps each code to the nearest d * delta_f / B, d in [0, floor(B / delta_f)].
/// Identity when delta_f is zero.
CodeSequence quantize_codes(const CodeSequence& codes, const RadarParams& params);
double quantize_code(double code, const RadarParams& params);

/// Per-element noise variance giving normalized SNR |gamma|^2 / (N sigma2).
double sigma2_from_snr_db(double snr_db, double gamma_abs, std::size_t n_pulses);

}  // namespace cogrsf
