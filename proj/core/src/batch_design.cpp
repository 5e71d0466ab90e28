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

#include "cogrsf/batch_design.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cogrsf {

void BatchDesignConfig::validate() const {
  if (!(delta > 0.0)) throw std::invalid_argument("batch design: delta must be positive");
  if (max_iter < 1) throw std::invalid_argument("batch design: max_iter must be >= 1");
  if (!(line_search.initial_step > 0.0) || !(line_search.shrink > 0.0 && line_search.shrink < 1.0))
    throw std::invalid_argument("batch design: invalid line search parameters");
}

double code_to_z(double code, double delta) {
  const double c = std::clamp(code, 0.0, 1.0);
  return std::tan(std::numbers::pi / (1.0 + 2.0 * delta) * (c - 0.5));
}

double z_to_code(double z, double delta) {
  return 0.5 + (1.0 + 2.0 * delta) / std::numbers::pi * std::atan(z);
}

std::vector<double> z_to_codes(std::span<const double> z, double delta) {
  std::vector<double> codes(z.size());
  std::transform(z.begin(), z.end(), codes.begin(), [delta](double v) { return z_to_code(v, delta); });
  return codes;
}

double lb2_at(std::span<const double> z, const SupportSet& support, const RangeDopplerGrid& grid,
              const RadarParams& params, double delta) {
  const auto codes = z_to_codes(z, delta);
  return ls_objective(sub_dictionary(codes, support, grid, params, true));
}

RVector lb2_gradient(std::span<const double> z, const SupportSet& support,
                     const RangeDopplerGrid& grid, const RadarParams& params, double delta) {
  const auto codes = z_to_codes(z, delta);
  const SubDictionary sub = sub_dictionary(codes, support, grid, params, true);
  const CMatrix& A = sub.A;
  const Eigen::Index rows = A.rows();
  const Eigen::Index cols = A.cols();
  const double doppler_scale = params.bandwidth_hz / params.carrier_hz;

  CMatrix D(rows, cols);
  for (Eigen::Index n = 0; n < rows; ++n) {
    const double zn = z[static_cast<std::size_t>(n)];
    const double dc_dz = (1.0 + 2.0 * delta) / (std::numbers::pi * (zn * zn + 1.0));
    for (Eigen::Index k = 0; k < cols; ++k) {
      const std::size_t l = support.indices()[static_cast<std::size_t>(k)];
      const double dphase_dc = grid.p(l) + grid.q(l) * static_cast<double>(n) * doppler_scale;
      D(n, k) = A(n, k) * Complex(0.0, dphase_dc) * dc_dz;
    }
  }

  // diag(D * B * A^H) without forming the N x N product.
  const CMatrix BAh = sub.gram() * A.adjoint();
  RVector grad(rows);
  for (Eigen::Index n = 0; n < rows; ++n)
    grad[n] = 4.0 * (D.row(n) * BAh.col(n)).value().real();
  return grad;
}

DesignTrace design_batch(const CodeSequence& init_codes, const SupportSet& support,
                         const RangeDopplerGrid& grid, const RadarParams& params,
                         const BatchDesignConfig& config) {
  config.validate();
  if (support.empty()) throw std::invalid_argument("design_batch: empty support");
  support.check_bounds(grid.size());

  const std::size_t n = init_codes.size();
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = code_to_z(init_codes[i], config.delta);

  DesignTrace trace;
  double f = lb2_at(z, support, grid, params, config.delta);
  trace.objective_per_iter.push_back(f);

  std::vector<double> trial(n);
  bool moved = false;
  for (std::size_t iter = 0; iter < config.max_iter; ++iter) {
    const RVector g = lb2_gradient(z, support, grid, params, config.delta);
    if (g.lpNorm<Eigen::Infinity>() < config.tol) break;

    const double slope = g.squaredNorm();
    double step = config.line_search.initial_step;
    bool accepted = false;
    for (std::size_t h = 0; h <= config.line_search.max_halvings; ++h) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = z[i] - step * g[static_cast<Eigen::Index>(i)];
      const double f_trial = lb2_at(trial, support, grid, params, config.delta);
      if (f_trial <= f - config.line_search.sufficient_decrease * step * slope && f_trial < f) {
        z.swap(trial);
        f = f_trial;
        accepted = true;
        break;
      }
      step *= config.line_search.shrink;
    }
    if (!accepted) break;
    moved = true;
    trace.objective_per_iter.push_back(f);
    ++trace.iterations_used;
  }

  if (!moved) {
    trace.final_codes = quantize_codes(init_codes, params);
  } else {
    std::vector<double> codes = z_to_codes(z, config.delta);
    for (auto& c : codes) c = std::clamp(c, 0.0, 1.0);
    trace.final_codes = quantize_codes(CodeSequence(std::move(codes)), params);
  }
  trace.final_objective =
      ls_objective(sub_dictionary(trace.final_codes.values(), support, grid, params, true));
  return trace;
}

}  // namespace cogrsf
