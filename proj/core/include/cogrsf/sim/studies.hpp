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
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "cogrsf/radar_model.hpp"
#include "cogrsf/sim/config.hpp"
#include "cogrsf/sim/stats.hpp"
#include "cogrsf/sparse_recovery.hpp"

namespace cogrsf::sim {

/// Flat CSV table; cells keep their type so integers print without a decimal point.
struct Table {
  using Cell = std::variant<std::int64_t, double, std::string>;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// UTF-8, '.' decimal separator, one header row, '\n' line endings.
void write_csv(std::ostream& out, const Table& table);
std::string to_csv(const Table& table);

/// Grid, gridded truth and support for a concrete scene.
struct SceneTruth {
  TargetScene scene;
  CVector x;
  SupportSet support;
};

SceneTruth make_scene_truth(const std::vector<GridTarget>& targets, const RangeDopplerGrid& grid);

/// K distinct cells drawn uniformly without replacement, all with gamma = 1.
template <class Urbg>
std::vector<GridTarget> random_grid_targets(std::size_t k, const RangeDopplerGrid& grid, Urbg& rng) {
  std::vector<std::size_t> cells(grid.size());
  for (std::size_t l = 0; l < cells.size(); ++l) cells[l] = l;
  std::vector<GridTarget> targets;
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, cells.size() - 1);
    std::swap(cells[i], cells[pick(rng)]);
    targets.push_back({grid.range_index(cells[i]), grid.doppler_index(cells[i]), {1.0, 0.0}});
  }
  return targets;
}

/// Per-element noise variance for a noise setting in dB.
double noise_sigma2(NoiseSpec::Kind kind, double value_db, std::size_t n_pulses);

/// Subspace Pursuit scored against the truth; a degenerate support counts as a
/// failed trial with x_hat = 0.
TrialRecord score_recovery(const CVector& y, const CMatrix& dict, const SceneTruth& truth,
                           std::size_t sp_max_iter, RecoveryResult* result = nullptr);

struct CrbScatterRow {
  std::size_t code_id = 0;
  double lb = 0.0;
  double mse = 0.0;
};

struct ObjectiveRow {
  double lb = 0.0;
  double lb2 = 0.0;
};

struct ConvergenceRow {
  std::size_t iter = 0;
  double mean_lb2 = 0.0;
};

struct BatchCompareRow {
  double snr_db = 0.0;
  std::string mode;
  TrialStats stats;
};

struct BatchCompareResult {
  std::vector<BatchCompareRow> rows;
  /// First-CPI statistics per SNR, same order as the SNR list.
  std::vector<TrialStats> first_cpi;
};

struct SequentialRow {
  double sigma2_db = 0.0;
  std::size_t n_measurements = 0;
  std::string mode;
  TrialStats stats;
};

struct DeltaFRow {
  double delta_f_hz = 0.0;
  std::string mode;
  TrialStats stats;
};

struct KSweepRow {
  std::size_t k = 0;
  std::string mode;
  TrialStats stats;
};

std::vector<CrbScatterRow> run_crb_scatter(const ScenarioConfig& cfg);
std::vector<ObjectiveRow> run_objective_comparison(const ScenarioConfig& cfg);
std::vector<ConvergenceRow> run_convergence(const ScenarioConfig& cfg);
BatchCompareResult run_batch_comparison(const ScenarioConfig& cfg);
std::vector<SequentialRow> run_sequential_comparison(const ScenarioConfig& cfg);
std::vector<DeltaFRow> run_deltaf_sweep(const ScenarioConfig& cfg);
std::vector<KSweepRow> run_k_sweep(const ScenarioConfig& cfg);

/// Geometric grid from B / 1e6 up to (but excluding) 1 / T_p.
std::vector<double> default_delta_f_list(const RadarParams& radar, std::size_t points);

Table to_table(const std::vector<CrbScatterRow>& rows);
Table to_table(const std::vector<ObjectiveRow>& rows);
Table to_table(const std::vector<ConvergenceRow>& rows);
Table to_table(const BatchCompareResult& result);
Table to_table(const std::vector<SequentialRow>& rows);
Table to_table(const std::vector<DeltaFRow>& rows);
Table to_table(const std::vector<KSweepRow>& rows);

/// Runs `study` and returns its CSV table.
Table run_study(Study study, const ScenarioConfig& cfg);

}  // namespace cogrsf::sim
