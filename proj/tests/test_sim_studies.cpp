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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cogrsf/sim/config.hpp"
#include "cogrsf/sim/rng.hpp"
#include "cogrsf/sim/stats.hpp"
#include "cogrsf/sim/studies.hpp"

namespace cogrsf::sim {
namespace {

// Shrunk trial counts so every study runs in well under a second.
ScenarioConfig small(Study study) {
  auto cfg = default_config(study);
  cfg.n_trials = 12;
  cfg.n_codes = 6;
  cfg.threads = 1;
  cfg.n_designed = 3;
  cfg.batch.max_iter = 10;
  if (study == Study::kObjectiveCompare) cfg.n_codes = 50;
  if (study == Study::kKSweep) cfg.k_list = {1, 3};
  if (study == Study::kDeltaFSweep) cfg.delta_f_points = 3;
  return cfg;
}

TEST(Stats, MeansInOrder) {
  const std::vector<TrialRecord> t{{1.0, true}, {3.0, false}, {2.0, true}, {6.0, true}};
  const auto s = compute_stats(t);
  EXPECT_DOUBLE_EQ(s.mse, 3.0);
  EXPECT_DOUBLE_EQ(s.exact_support_fraction, 0.75);
  EXPECT_EQ(s.n_trials, 4u);
  const auto empty = compute_stats({});
  EXPECT_EQ(empty.n_trials, 0u);
  EXPECT_EQ(empty.mse, 0.0);
}

TEST(Stats, RanksAndSpearman) {
  const std::vector<double> v{10.0, 30.0, 20.0, 30.0};
  EXPECT_EQ(average_ranks(v), (std::vector<double>{1.0, 3.5, 2.0, 3.5}));
  const std::vector<double> a{1, 2, 3, 4, 5}, b{2, 4, 6, 8, 100}, c{5, 4, 3, 2, 1};
  EXPECT_NEAR(spearman(a, b), 1.0, 1e-15);
  EXPECT_NEAR(spearman(a, c), -1.0, 1e-15);
  const std::vector<double> flat{1, 1, 1, 1, 1};
  EXPECT_EQ(spearman(a, flat), 0.0);
  // 1 - 6 sum(d^2) / (n (n^2 - 1)) with sum(d^2) = 4.
  const std::vector<double> x{1, 2, 3, 4, 5}, y{2, 1, 4, 3, 5};
  EXPECT_NEAR(spearman(x, y), 0.8, 1e-15);
  EXPECT_THROW(spearman(a, std::vector<double>{1, 2}), std::invalid_argument);
  EXPECT_THROW(spearman(std::vector<double>{1}, std::vector<double>{1}), std::invalid_argument);
}

TEST(Rng, StreamsAreKeyed) {
  auto a = make_stream(1, StreamTag::kNoise, {3});
  auto b = make_stream(1, StreamTag::kNoise, {3});
  auto c = make_stream(1, StreamTag::kNoise, {4});
  auto d = make_stream(1, StreamTag::kCodes, {3});
  const auto va = a();
  EXPECT_EQ(va, b());
  EXPECT_NE(va, c());
  EXPECT_NE(va, d());
}

TEST(Csv, Formatting) {
  Table t{{"a", "b", "c"}, {{std::int64_t{3}, 0.25, std::string("x")}, {std::int64_t{-1}, 1e-20, std::string("y")}}};
  EXPECT_EQ(to_csv(t), "a,b,c\n3,0.25,x\n-1,1e-20,y\n");
}

TEST(SceneTruth, RandomTargetsAreDistinct) {
  const auto grid = make_grid(RadarParams{}, 4, 20);
  auto rng = make_stream(5, StreamTag::kScene, {0});
  for (int rep = 0; rep < 50; ++rep) {
    const auto targets = random_grid_targets(8, grid, rng);
    std::set<std::pair<std::size_t, std::size_t>> cells;
    for (const auto& t : targets) cells.insert({t.range_cell, t.doppler_cell});
    EXPECT_EQ(cells.size(), 8u);
    const auto truth = make_scene_truth(targets, grid);
    EXPECT_EQ(truth.support.size(), 8u);
    EXPECT_NEAR(truth.x.squaredNorm(), 8.0, 1e-12);
  }
}

TEST(ScoreRecovery, DegenerateCountsAsFailure) {
  const auto grid = make_grid(RadarParams{}, 4, 20);
  const auto truth = make_scene_truth({{1, 1, {2.0, 0.0}}, {2, 2, {1.0, 0.0}}}, grid);
  const CMatrix dict = CMatrix::Ones(20, 80);
  RecoveryResult result;
  const auto rec = score_recovery(CVector::Ones(20), dict, truth, 50, &result);
  EXPECT_FALSE(rec.exact_support);
  EXPECT_DOUBLE_EQ(rec.squared_error, 5.0);
  EXPECT_TRUE(result.support.empty());
}

TEST(NoiseSigma2, Conversions) {
  EXPECT_NEAR(noise_sigma2(NoiseSpec::Kind::kSnrDb, 20.0, 20), 5e-4, 1e-18);
  EXPECT_NEAR(noise_sigma2(NoiseSpec::Kind::kSigma2Db, -10.0, 20), 0.1, 1e-16);
  EXPECT_NEAR(noise_sigma2(NoiseSpec::Kind::kSigma2Db, 0.0, 20), 1.0, 1e-16);
}

TEST(DeltaFList, GeometricBelowGhostLimit) {
  RadarParams radar;
  const auto list = default_delta_f_list(radar, 6);
  ASSERT_EQ(list.size(), 6u);
  EXPECT_NEAR(list.front(), radar.bandwidth_hz / 1e6, 1e-9);
  EXPECT_LT(list.back(), 1.0 / radar.pulse_width_s);
  for (std::size_t i = 2; i < list.size(); ++i)
    EXPECT_NEAR(list[i] / list[i - 1], list[1] / list[0], 1e-9);
}

TEST(Studies, HeadersAndRowCounts) {
  struct Expect {
    Study study;
    std::vector<std::string> header;
    std::size_t rows;
  };
  const std::vector<Expect> cases{
      {Study::kCrbScatter, {"code_id", "LB", "MSE"}, 6},
      {Study::kObjectiveCompare, {"LB", "LB2"}, 50},
      {Study::kConvergence, {"iter", "mean_LB2"}, 11},
      {Study::kBatchCompare, {"snr_db", "mode", "mse", "exact_fraction"}, 10},
      {Study::kSequentialCompare, {"sigma2_db", "n_measurements", "mode", "mse", "exact_fraction"}, 2 * 3 * 3},
      {Study::kDeltaFSweep, {"delta_f", "mode", "mse"}, 3 * 3},
      {Study::kKSweep, {"K", "mode", "mse", "n_trials"}, 2 * 3},
  };
  for (const auto& c : cases) {
    const auto table = run_study(c.study, small(c.study));
    EXPECT_EQ(table.header, c.header) << study_name(c.study);
    EXPECT_EQ(table.rows.size(), c.rows) << study_name(c.study);
    for (const auto& row : table.rows) EXPECT_EQ(row.size(), c.header.size());
  }
}

TEST(Studies, SameSeedIsByteIdentical) {
  for (Study s : all_studies()) {
    const auto cfg = small(s);
    EXPECT_EQ(to_csv(run_study(s, cfg)), to_csv(run_study(s, cfg))) << study_name(s);
  }
}

TEST(Studies, ThreadCountDoesNotChangeResults) {
  for (Study s : {Study::kCrbScatter, Study::kBatchCompare, Study::kSequentialCompare, Study::kKSweep}) {
    auto one = small(s);
    auto many = one;
    many.threads = 3;
    EXPECT_EQ(to_csv(run_study(s, one)), to_csv(run_study(s, many))) << study_name(s);
  }
}

TEST(Studies, SeedChangesResults) {
  auto a = small(Study::kCrbScatter);
  auto b = a;
  b.seed = a.seed + 1;
  EXPECT_NE(to_csv(run_study(Study::kCrbScatter, a)), to_csv(run_study(Study::kCrbScatter, b)));
}

TEST(Studies, ModeFilterAndRejection) {
  auto cfg = small(Study::kBatchCompare);
  cfg.code_modes = {CodeMode::kBatchAdaptive};
  const auto result = run_batch_comparison(cfg);
  ASSERT_EQ(result.rows.size(), 5u);
  for (const auto& r : result.rows) EXPECT_EQ(r.mode, "adaptive");
  cfg.code_modes = {CodeMode::kSequentialMode1};
  EXPECT_THROW(run_batch_comparison(cfg), ConfigError);
}

TEST(Studies, MissingNoiseOrTargetsRejected) {
  auto cfg = small(Study::kBatchCompare);
  cfg.noise.reset();
  EXPECT_THROW(run_batch_comparison(cfg), ConfigError);
  auto k = small(Study::kKSweep);
  k.k_list = {0};
  EXPECT_THROW(run_k_sweep(k), ConfigError);
  k.k_list = {21};
  EXPECT_THROW(run_k_sweep(k), ConfigError);
}

TEST(Studies, SequentialShapes) {
  const auto rows = run_sequential_comparison(small(Study::kSequentialCompare));
  std::set<std::string> modes;
  for (const auto& r : rows) {
    modes.insert(r.mode);
    EXPECT_GE(r.n_measurements, 21u);
    EXPECT_LE(r.n_measurements, 23u);
    EXPECT_GE(r.stats.mse, 0.0);
    EXPECT_EQ(r.stats.n_trials, 12u);
  }
  EXPECT_EQ(modes, (std::set<std::string>{"random", "mode1", "mode2"}));
}

TEST(Studies, ConvergenceStartsAtRandomCodes) {
  const auto rows = run_convergence(small(Study::kConvergence));
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front().iter, 0u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(rows[i].mean_lb2, rows[i - 1].mean_lb2 + 1e-12);
  EXPECT_GE(rows.back().mean_lb2, 4.0 - 1e-9);
}

}  // namespace
}  // namespace cogrsf::sim
