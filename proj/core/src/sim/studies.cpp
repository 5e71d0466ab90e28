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

#include "cogrsf/sim/studies.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>

#include "cogrsf/batch_design.hpp"
#include "cogrsf/criteria.hpp"
#include "cogrsf/sequential_design.hpp"
#include "cogrsf/sim/rng.hpp"
#include "parallel.hpp"

namespace cogrsf::sim {

namespace {

enum class SessionMode { kRandom, kMode1, kMode2 };

std::string_view session_label(SessionMode mode) {
  switch (mode) {
    case SessionMode::kRandom: return "random";
    case SessionMode::kMode1: return "mode1";
    case SessionMode::kMode2: return "mode2";
  }
  return "";
}

RangeDopplerGrid grid_for(const ScenarioConfig& cfg) {
  return make_grid(cfg.radar, cfg.grid_p, cfg.grid_q);
}

bool wants(const ScenarioConfig& cfg, CodeMode mode) {
  return cfg.code_modes.empty() ||
         std::find(cfg.code_modes.begin(), cfg.code_modes.end(), mode) != cfg.code_modes.end();
}

void reject_modes(const ScenarioConfig& cfg, std::initializer_list<CodeMode> supported,
                  std::string_view study) {
  for (CodeMode m : cfg.code_modes) {
    if (std::find(supported.begin(), supported.end(), m) == supported.end())
      throw ConfigError("code_mode '" + std::string(code_mode_name(m)) + "' is not valid for " +
                        std::string(study));
  }
}

std::vector<SessionMode> session_modes(const ScenarioConfig& cfg, std::string_view study) {
  reject_modes(cfg, {CodeMode::kPredefinedRandom, CodeMode::kSequentialMode1, CodeMode::kSequentialMode2},
               study);
  std::vector<SessionMode> modes;
  if (wants(cfg, CodeMode::kPredefinedRandom)) modes.push_back(SessionMode::kRandom);
  if (wants(cfg, CodeMode::kSequentialMode1)) modes.push_back(SessionMode::kMode1);
  if (wants(cfg, CodeMode::kSequentialMode2)) modes.push_back(SessionMode::kMode2);
  return modes;
}

const NoiseSpec& require_noise(const ScenarioConfig& cfg, std::string_view study) {
  if (!cfg.noise || cfg.noise->values_db.empty())
    throw ConfigError(std::string(study) + " needs snr_db or sigma2_db");
  return *cfg.noise;
}

SceneTruth fixed_truth(const ScenarioConfig& cfg, const RangeDopplerGrid& grid, std::string_view study) {
  if (cfg.scene.targets.empty())
    throw ConfigError(std::string(study) + " needs explicit targets");
  return make_scene_truth(cfg.scene.targets, grid);
}

/// Scene for one trial: the explicit targets, or K random cells.
SceneTruth trial_truth(const ScenarioConfig& cfg, const RangeDopplerGrid& grid, std::size_t k,
                       RngStream& rng) {
  if (k == 0) return make_scene_truth(cfg.scene.targets, grid);
  return make_scene_truth(random_grid_targets(k, grid, rng), grid);
}

CVector noise_vector(std::size_t length, double sigma2, RngStream& rng) {
  return add_noise(CVector::Zero(static_cast<Eigen::Index>(length)), sigma2, rng).y;
}

CVector measure(const SceneTruth& truth, const CodeSequence& codes, const RangeDopplerGrid& grid,
                const RadarParams& radar, const CVector& noise) {
  CVector y = synthesize_echo(truth.scene, codes, grid, radar);
  y += noise.head(y.size());
  return y;
}

struct SessionInputs {
  const SceneTruth& truth;
  const RadarParams& radar;
  const RangeDopplerGrid& grid;
  const CodeSequence& init_codes;
  const CVector& noise;
  std::size_t n_designed;
  std::size_t n_candidates;
  std::size_t sp_max_iter;
};

/// One sequential session: after each new pulse, SP on all pulses so far.
std::vector<TrialRecord> run_session(const SessionInputs& in, SessionMode mode, RngStream& random_rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CodeSequence codes = quantize_codes(in.init_codes, in.radar);
  RecoveryResult estimate;
  score_recovery(measure(in.truth, codes, in.grid, in.radar, in.noise),
                 build_dictionary(in.grid, codes, in.radar), in.truth, in.sp_max_iter, &estimate);

  std::vector<TrialRecord> records;
  records.reserve(in.n_designed);
  SequentialState state;
  SupportSet state_support;
  bool have_state = false;
  for (std::size_t step = 0; step < in.n_designed; ++step) {
    double code = 0.0;
    const bool adaptive = mode != SessionMode::kRandom && !estimate.support.empty();
    if (!adaptive) {
      code = unit(random_rng);
      have_state = false;
    } else {
      if (!have_state || state_support != estimate.support) {
        state_support = estimate.support;
        state = make_sequential_state(codes, state_support, in.grid, in.radar);
        have_state = true;
      }
      code = design_next_code(state,
                              mode == SessionMode::kMode1 ? SequentialMode::kCrb : SequentialMode::kQuadratic,
                              state_support, in.grid, in.radar, in.n_candidates);
    }
    code = quantize_code(code, in.radar);
    if (have_state)
      state = update_state(std::move(state),
                           candidate_row(code, state_support, in.grid, in.radar, codes.size()));
    codes.push_back(code);

    records.push_back(score_recovery(measure(in.truth, codes, in.grid, in.radar, in.noise),
                                     build_dictionary(in.grid, codes, in.radar), in.truth,
                                     in.sp_max_iter, &estimate));
  }
  return records;
}

/// Runs all sessions of `n_trials` trials; result[trial][mode][step].
using SessionGrid = std::vector<std::vector<std::vector<TrialRecord>>>;

SessionGrid run_sessions(const ScenarioConfig& cfg, const RadarParams& radar,
                         const RangeDopplerGrid& grid, const std::vector<SessionMode>& modes,
                         std::size_t random_k, double sigma2, std::uint64_t point_id) {
  SessionGrid out(cfg.n_trials);
  const std::size_t initial = radar.n_pulses;
  detail::parallel_for(cfg.n_trials, cfg.threads, [&](std::size_t trial) {
    auto scene_rng = make_stream(cfg.seed, StreamTag::kScene, {point_id, trial});
    auto code_rng = make_stream(cfg.seed, StreamTag::kCodes, {point_id, trial});
    auto noise_rng = make_stream(cfg.seed, StreamTag::kNoise, {point_id, trial});
    const SceneTruth truth = trial_truth(cfg, grid, random_k, scene_rng);
    const CodeSequence init = random_codes(initial, code_rng);
    const CVector noise = noise_vector(initial + cfg.n_designed, sigma2, noise_rng);
    const SessionInputs in{truth, radar, grid, init, noise, cfg.n_designed, cfg.n_candidates,
                           cfg.sp_max_iter};
    out[trial].reserve(modes.size());
    for (SessionMode mode : modes) {
      auto random_rng = make_stream(cfg.seed, StreamTag::kRandomMode, {point_id, trial});
      out[trial].push_back(run_session(in, mode, random_rng));
    }
  });
  return out;
}

TrialStats final_step_stats(const SessionGrid& grid, std::size_t mode_index) {
  std::vector<TrialRecord> records;
  records.reserve(grid.size());
  for (const auto& trial : grid) records.push_back(trial[mode_index].back());
  return compute_stats(records);
}

std::string format_double(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << v;
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << (i ? "," : "") << csv_escape(table.header[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_double(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
              out << csv_escape(v);
            } else {
              out << v;
            }
          },
          row[i]);
    }
    out << '\n';
  }
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  write_csv(os, table);
  return os.str();
}

SceneTruth make_scene_truth(const std::vector<GridTarget>& targets, const RangeDopplerGrid& grid) {
  SceneTruth truth;
  for (const auto& t : targets) {
    const std::size_t l = grid.index(t.range_cell, t.doppler_cell);
    truth.scene.targets.push_back({t.gamma, grid.p(l), grid.q(l)});
  }
  truth.x = scene_to_sparse_vector(truth.scene, grid);
  truth.support = SupportSet(scene_cells(truth.scene, grid));
  return truth;
}

double noise_sigma2(NoiseSpec::Kind kind, double value_db, std::size_t n_pulses) {
  if (kind == NoiseSpec::Kind::kSnrDb) return sigma2_from_snr_db(value_db, 1.0, n_pulses);
  return std::pow(10.0, value_db / 10.0);
}

TrialRecord score_recovery(const CVector& y, const CMatrix& dict, const SceneTruth& truth,
                           std::size_t sp_max_iter, RecoveryResult* result) {
  try {
    RecoveryResult est = subspace_pursuit(y, dict, truth.support.size(), sp_max_iter);
    TrialRecord rec{(truth.x - est.x_hat).squaredNorm(), exact_support_match(est, truth.support)};
    if (result) *result = std::move(est);
    return rec;
  } catch (const DegenerateSupportError&) {
    if (result) *result = RecoveryResult{CVector::Zero(dict.cols()), {}, y.norm(), 0, false};
    return {truth.x.squaredNorm(), false};
  }
}

std::vector<double> default_delta_f_list(const RadarParams& radar, std::size_t points) {
  if (points == 0) return {};
  const double lo = radar.bandwidth_hz / 1e6;
  const double hi = 1.0 / radar.pulse_width_s;
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i)
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(points));
  return out;
}

std::vector<CrbScatterRow> run_crb_scatter(const ScenarioConfig& cfg) {
  constexpr std::string_view study = "crb-scatter";
  const auto grid = grid_for(cfg);
  const SceneTruth truth = fixed_truth(cfg, grid, study);
  const auto& noise = require_noise(cfg, study);
  const double sigma2 = noise_sigma2(noise.kind, noise.values_db.front(), cfg.radar.n_pulses);

  std::vector<CrbScatterRow> rows(cfg.n_codes);
  detail::parallel_for(cfg.n_codes, cfg.threads, [&](std::size_t code_id) {
    auto code_rng = make_stream(cfg.seed, StreamTag::kCodes, {code_id});
    const CodeSequence codes = random_codes(cfg.radar.n_pulses, code_rng);
    const CMatrix dict = build_dictionary(grid, codes, cfg.radar);
    const CVector clean = dict * truth.x;
    std::vector<TrialRecord> records(cfg.n_trials);
    for (std::size_t t = 0; t < cfg.n_trials; ++t) {
      auto noise_rng = make_stream(cfg.seed, StreamTag::kNoise, {code_id, t});
      records[t] = score_recovery(clean + noise_vector(codes.size(), sigma2, noise_rng), dict, truth,
                                  cfg.sp_max_iter);
    }
    rows[code_id] = {code_id, crb_objective(sub_dictionary(dict, truth.support, true)),
                     compute_stats(records).mse};
  });
  return rows;
}

std::vector<ObjectiveRow> run_objective_comparison(const ScenarioConfig& cfg) {
  const auto grid = grid_for(cfg);
  const SceneTruth truth = fixed_truth(cfg, grid, "objective-compare");
  std::vector<ObjectiveRow> rows(cfg.n_codes);
  detail::parallel_for(cfg.n_codes, cfg.threads, [&](std::size_t code_id) {
    auto code_rng = make_stream(cfg.seed, StreamTag::kCodes, {code_id});
    const CodeSequence codes = random_codes(cfg.radar.n_pulses, code_rng);
    const SubDictionary sub = sub_dictionary(codes.values(), truth.support, grid, cfg.radar, true);
    rows[code_id] = {crb_objective(sub), ls_objective(sub)};
  });
  return rows;
}

std::vector<ConvergenceRow> run_convergence(const ScenarioConfig& cfg) {
  const auto grid = grid_for(cfg);
  const SceneTruth truth = fixed_truth(cfg, grid, "convergence");
  const std::size_t length = cfg.batch.max_iter + 1;
  std::vector<std::vector<double>> curves(cfg.n_trials);
  detail::parallel_for(cfg.n_trials, cfg.threads, [&](std::size_t trial) {
    auto code_rng = make_stream(cfg.seed, StreamTag::kCodes, {trial});
    const CodeSequence init = random_codes(cfg.radar.n_pulses, code_rng);
    auto curve = design_batch(init, truth.support, grid, cfg.radar, cfg.batch).objective_per_iter;
    curve.resize(length, curve.back());  // hold the last value after an early stop
    curves[trial] = std::move(curve);
  });
  std::vector<ConvergenceRow> rows(length);
  for (std::size_t i = 0; i < length; ++i) {
    double sum = 0.0;
    for (const auto& c : curves) sum += c[i];
    rows[i] = {i, cfg.n_trials ? sum / static_cast<double>(cfg.n_trials) : 0.0};
  }
  return rows;
}

BatchCompareResult run_batch_comparison(const ScenarioConfig& cfg) {
  constexpr std::string_view study = "batch-compare";
  reject_modes(cfg, {CodeMode::kPredefinedRandom, CodeMode::kBatchAdaptive}, study);
  const auto grid = grid_for(cfg);
  const SceneTruth truth = fixed_truth(cfg, grid, study);
  const auto& noise = require_noise(cfg, study);
  const bool predefined = wants(cfg, CodeMode::kPredefinedRandom);
  const bool adaptive = wants(cfg, CodeMode::kBatchAdaptive);

  auto predefined_rng = make_stream(cfg.seed, StreamTag::kPredefined);
  const CodeSequence c0 = quantize_codes(random_codes(cfg.radar.n_pulses, predefined_rng), cfg.radar);
  const CMatrix dict0 = build_dictionary(grid, c0, cfg.radar);
  const CVector clean0 = dict0 * truth.x;

  BatchCompareResult result;
  for (std::size_t s = 0; s < noise.values_db.size(); ++s) {
    const double value_db = noise.values_db[s];
    const double sigma2 = noise_sigma2(noise.kind, value_db, cfg.radar.n_pulses);
    std::vector<TrialRecord> first(cfg.n_trials), fixed(cfg.n_trials), designed(cfg.n_trials);
    detail::parallel_for(cfg.n_trials, cfg.threads, [&](std::size_t trial) {
      auto rng1 = make_stream(cfg.seed, StreamTag::kNoise, {s, trial});
      auto rng2 = make_stream(cfg.seed, StreamTag::kSecondNoise, {s, trial});
      const CVector w1 = noise_vector(c0.size(), sigma2, rng1);
      const CVector w2 = noise_vector(c0.size(), sigma2, rng2);

      RecoveryResult estimate;
      first[trial] = score_recovery(clean0 + w1, dict0, truth, cfg.sp_max_iter, &estimate);
      if (predefined) fixed[trial] = score_recovery(clean0 + w2, dict0, truth, cfg.sp_max_iter);
      if (adaptive) {
        CodeSequence codes = c0;
        if (!estimate.support.empty())
          codes = design_batch(c0, estimate.support, grid, cfg.radar, cfg.batch).final_codes;
        const CMatrix dict = build_dictionary(grid, codes, cfg.radar);
        designed[trial] = score_recovery(dict * truth.x + w2, dict, truth, cfg.sp_max_iter);
      }
    });
    result.first_cpi.push_back(compute_stats(first));
    if (predefined) result.rows.push_back({value_db, "predefined", compute_stats(fixed)});
    if (adaptive) result.rows.push_back({value_db, "adaptive", compute_stats(designed)});
  }
  return result;
}

std::vector<SequentialRow> run_sequential_comparison(const ScenarioConfig& cfg) {
  constexpr std::string_view study = "sequential-compare";
  const auto modes = session_modes(cfg, study);
  const auto grid = grid_for(cfg);
  const auto& noise = require_noise(cfg, study);
  const std::size_t random_k = cfg.scene.random_k.value_or(0);
  if (random_k == 0) fixed_truth(cfg, grid, study);

  std::vector<SequentialRow> rows;
  for (std::size_t s = 0; s < noise.values_db.size(); ++s) {
    const double value_db = noise.values_db[s];
    const double sigma2 = noise_sigma2(noise.kind, value_db, cfg.radar.n_pulses);
    const SessionGrid sessions = run_sessions(cfg, cfg.radar, grid, modes, random_k, sigma2, s);
    for (std::size_t m = 0; m < modes.size(); ++m) {
      for (std::size_t step = 0; step < cfg.n_designed; ++step) {
        std::vector<TrialRecord> records;
        records.reserve(sessions.size());
        for (const auto& trial : sessions) records.push_back(trial[m][step]);
        rows.push_back({value_db, cfg.radar.n_pulses + step + 1, std::string(session_label(modes[m])),
                        compute_stats(records)});
      }
    }
  }
  return rows;
}

std::vector<DeltaFRow> run_deltaf_sweep(const ScenarioConfig& cfg) {
  constexpr std::string_view study = "deltaf-sweep";
  const auto modes = session_modes(cfg, study);
  const auto grid = grid_for(cfg);
  const auto& noise = require_noise(cfg, study);
  const double sigma2 = noise_sigma2(noise.kind, noise.values_db.front(), cfg.radar.n_pulses);
  const std::size_t random_k = cfg.scene.random_k.value_or(0);
  if (random_k == 0) fixed_truth(cfg, grid, study);
  const auto steps =
      cfg.delta_f_list.empty() ? default_delta_f_list(cfg.radar, cfg.delta_f_points) : cfg.delta_f_list;

  std::vector<DeltaFRow> rows;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    RadarParams radar = cfg.radar;
    radar.delta_f_hz = steps[i];
    try {
      radar.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    // Same trials at every step size so the sweep is paired.
    const SessionGrid sessions = run_sessions(cfg, radar, grid, modes, random_k, sigma2, 0);
    for (std::size_t m = 0; m < modes.size(); ++m)
      rows.push_back({steps[i], std::string(session_label(modes[m])), final_step_stats(sessions, m)});
  }
  return rows;
}

std::vector<KSweepRow> run_k_sweep(const ScenarioConfig& cfg) {
  constexpr std::string_view study = "k-sweep";
  const auto modes = session_modes(cfg, study);
  const auto grid = grid_for(cfg);
  const auto& noise = require_noise(cfg, study);
  const double sigma2 = noise_sigma2(noise.kind, noise.values_db.front(), cfg.radar.n_pulses);
  if (cfg.k_list.empty()) throw ConfigError("k-sweep needs a non-empty k_list");

  std::vector<KSweepRow> rows;
  for (std::size_t k : cfg.k_list) {
    if (k == 0) throw ConfigError("k-sweep: K must be >= 1");
    if (k > grid.size() || 2 * k > cfg.radar.n_pulses)
      throw ConfigError("k-sweep: K too large for the grid or pulse count");
    const SessionGrid sessions = run_sessions(cfg, cfg.radar, grid, modes, k, sigma2, k);
    for (std::size_t m = 0; m < modes.size(); ++m)
      rows.push_back({k, std::string(session_label(modes[m])), final_step_stats(sessions, m)});
  }
  return rows;
}

Table to_table(const std::vector<CrbScatterRow>& rows) {
  Table t{{"code_id", "LB", "MSE"}, {}};
  for (const auto& r : rows) t.rows.push_back({static_cast<std::int64_t>(r.code_id), r.lb, r.mse});
  return t;
}

Table to_table(const std::vector<ObjectiveRow>& rows) {
  Table t{{"LB", "LB2"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.lb, r.lb2});
  return t;
}

Table to_table(const std::vector<ConvergenceRow>& rows) {
  Table t{{"iter", "mean_LB2"}, {}};
  for (const auto& r : rows) t.rows.push_back({static_cast<std::int64_t>(r.iter), r.mean_lb2});
  return t;
}

Table to_table(const BatchCompareResult& result) {
  Table t{{"snr_db", "mode", "mse", "exact_fraction"}, {}};
  for (const auto& r : result.rows)
    t.rows.push_back({r.snr_db, r.mode, r.stats.mse, r.stats.exact_support_fraction});
  return t;
}

Table to_table(const std::vector<SequentialRow>& rows) {
  Table t{{"sigma2_db", "n_measurements", "mode", "mse", "exact_fraction"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({r.sigma2_db, static_cast<std::int64_t>(r.n_measurements), r.mode, r.stats.mse,
                      r.stats.exact_support_fraction});
  return t;
}

Table to_table(const std::vector<DeltaFRow>& rows) {
  Table t{{"delta_f", "mode", "mse"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.delta_f_hz, r.mode, r.stats.mse});
  return t;
}

Table to_table(const std::vector<KSweepRow>& rows) {
  Table t{{"K", "mode", "mse", "n_trials"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({static_cast<std::int64_t>(r.k), r.mode, r.stats.mse,
                      static_cast<std::int64_t>(r.stats.n_trials)});
  return t;
}

Table run_study(Study study, const ScenarioConfig& cfg) {
  cfg.validate();
  switch (study) {
    case Study::kCrbScatter: return to_table(run_crb_scatter(cfg));
    case Study::kObjectiveCompare: return to_table(run_objective_comparison(cfg));
    case Study::kConvergence: return to_table(run_convergence(cfg));
    case Study::kBatchCompare: return to_table(run_batch_comparison(cfg));
    case Study::kSequentialCompare: return to_table(run_sequential_comparison(cfg));
    case Study::kDeltaFSweep: return to_table(run_deltaf_sweep(cfg));
    case Study::kKSweep: return to_table(run_k_sweep(cfg));
  }
  throw ConfigError("unknown study");
}

}  // namespace cogrsf::sim
