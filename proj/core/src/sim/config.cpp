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

#include "cogrsf/sim/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace cogrsf::sim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, std::string_view separators) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = s.find_first_of(separators, start);
    const auto piece = trim(s.substr(start, end == std::string_view::npos ? s.npos : end - start));
    if (!piece.empty()) parts.push_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

double to_double(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ConfigError("invalid number for '" + std::string(key) + "': " + std::string(text));
  return value;
}

std::uint64_t to_u64(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ConfigError("invalid integer for '" + std::string(key) + "': " + std::string(text));
  return value;
}

std::size_t to_count(std::string_view key, std::string_view text) {
  return static_cast<std::size_t>(to_u64(key, text));
}

std::vector<double> to_doubles(std::string_view key, std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ",")) out.push_back(to_double(key, part));
  if (out.empty()) throw ConfigError("empty list for '" + std::string(key) + "'");
  return out;
}

std::vector<GridTarget> to_targets(std::string_view text) {
  std::vector<GridTarget> targets;
  for (auto entry : split(text, ";")) {
    const auto fields = split(entry, ":");
    if (fields.size() < 2 || fields.size() > 4)
      throw ConfigError("target must be m:n[:re[:im]], got '" + std::string(entry) + "'");
    GridTarget t;
    t.range_cell = to_count("targets", fields[0]);
    t.doppler_cell = to_count("targets", fields[1]);
    const double re = fields.size() > 2 ? to_double("targets", fields[2]) : 1.0;
    const double im = fields.size() > 3 ? to_double("targets", fields[3]) : 0.0;
    t.gamma = Complex(re, im);
    targets.push_back(t);
  }
  return targets;
}

std::vector<CodeMode> to_modes(std::string_view text) {
  std::vector<CodeMode> modes;
  for (auto part : split(text, ",")) {
    bool found = false;
    for (auto mode : {CodeMode::kPredefinedRandom, CodeMode::kBatchAdaptive,
                      CodeMode::kSequentialMode1, CodeMode::kSequentialMode2}) {
      if (code_mode_name(mode) == part) {
        modes.push_back(mode);
        found = true;
      }
    }
    if (!found) throw ConfigError("unknown code_mode '" + std::string(part) + "'");
  }
  return modes;
}

using Setter = std::function<void(ScenarioConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"carrier_hz", [](ScenarioConfig& c, std::string_view v) { c.radar.carrier_hz = to_double("carrier_hz", v); }},
      {"bandwidth_hz", [](ScenarioConfig& c, std::string_view v) { c.radar.bandwidth_hz = to_double("bandwidth_hz", v); }},
      {"pri_s", [](ScenarioConfig& c, std::string_view v) { c.radar.pri_s = to_double("pri_s", v); }},
      {"pulse_width_s", [](ScenarioConfig& c, std::string_view v) { c.radar.pulse_width_s = to_double("pulse_width_s", v); }},
      {"n_pulses", [](ScenarioConfig& c, std::string_view v) { c.radar.n_pulses = to_count("n_pulses", v); }},
      {"delta_f_hz", [](ScenarioConfig& c, std::string_view v) { c.radar.delta_f_hz = to_double("delta_f_hz", v); }},
      {"grid_p", [](ScenarioConfig& c, std::string_view v) { c.grid_p = to_count("grid_p", v); }},
      {"grid_q", [](ScenarioConfig& c, std::string_view v) { c.grid_q = to_count("grid_q", v); }},
      {"targets", [](ScenarioConfig& c, std::string_view v) {
         c.scene.targets = to_targets(v);
         c.scene.random_k.reset();
       }},
      {"random_k", [](ScenarioConfig& c, std::string_view v) {
         c.scene.random_k = to_count("random_k", v);
         c.scene.targets.clear();
       }},
      {"code_mode", [](ScenarioConfig& c, std::string_view v) { c.code_modes = to_modes(v); }},
      {"snr_db", [](ScenarioConfig& c, std::string_view v) {
         c.noise = NoiseSpec{NoiseSpec::Kind::kSnrDb, to_doubles("snr_db", v)};
       }},
      {"sigma2_db", [](ScenarioConfig& c, std::string_view v) {
         c.noise = NoiseSpec{NoiseSpec::Kind::kSigma2Db, to_doubles("sigma2_db", v)};
       }},
      {"n_trials", [](ScenarioConfig& c, std::string_view v) { c.n_trials = to_count("n_trials", v); }},
      {"seed", [](ScenarioConfig& c, std::string_view v) { c.seed = to_u64("seed", v); }},
      {"output", [](ScenarioConfig& c, std::string_view v) { c.output = std::string(v); }},
      {"n_codes", [](ScenarioConfig& c, std::string_view v) { c.n_codes = to_count("n_codes", v); }},
      {"sp_max_iter", [](ScenarioConfig& c, std::string_view v) { c.sp_max_iter = to_count("sp_max_iter", v); }},
      {"delta", [](ScenarioConfig& c, std::string_view v) { c.batch.delta = to_double("delta", v); }},
      {"design_iters", [](ScenarioConfig& c, std::string_view v) { c.batch.max_iter = to_count("design_iters", v); }},
      {"design_tol", [](ScenarioConfig& c, std::string_view v) { c.batch.tol = to_double("design_tol", v); }},
      {"n_designed", [](ScenarioConfig& c, std::string_view v) { c.n_designed = to_count("n_designed", v); }},
      {"n_candidates", [](ScenarioConfig& c, std::string_view v) { c.n_candidates = to_count("n_candidates", v); }},
      {"delta_f_list", [](ScenarioConfig& c, std::string_view v) { c.delta_f_list = to_doubles("delta_f_list", v); }},
      {"delta_f_points", [](ScenarioConfig& c, std::string_view v) { c.delta_f_points = to_count("delta_f_points", v); }},
      {"k_list", [](ScenarioConfig& c, std::string_view v) {
         c.k_list.clear();
         for (auto part : split(v, ",")) c.k_list.push_back(to_count("k_list", part));
       }},
      {"threads", [](ScenarioConfig& c, std::string_view v) { c.threads = to_count("threads", v); }},
  };
  return table;
}

}  // namespace

std::string_view study_name(Study study) {
  switch (study) {
    case Study::kCrbScatter: return "crb-scatter";
    case Study::kObjectiveCompare: return "objective-compare";
    case Study::kConvergence: return "convergence";
    case Study::kBatchCompare: return "batch-compare";
    case Study::kSequentialCompare: return "sequential-compare";
    case Study::kDeltaFSweep: return "deltaf-sweep";
    case Study::kKSweep: return "k-sweep";
  }
  return "";
}

const std::vector<Study>& all_studies() {
  static const std::vector<Study> studies = {
      Study::kCrbScatter,        Study::kObjectiveCompare, Study::kConvergence, Study::kBatchCompare,
      Study::kSequentialCompare, Study::kDeltaFSweep,      Study::kKSweep};
  return studies;
}

std::optional<Study> parse_study(std::string_view name) {
  for (Study s : all_studies())
    if (study_name(s) == name) return s;
  return std::nullopt;
}

std::string_view code_mode_name(CodeMode mode) {
  switch (mode) {
    case CodeMode::kPredefinedRandom: return "predefined-random";
    case CodeMode::kBatchAdaptive: return "batch-adaptive";
    case CodeMode::kSequentialMode1: return "sequential-mode-1";
    case CodeMode::kSequentialMode2: return "sequential-mode-2";
  }
  return "";
}

void ScenarioConfig::validate() const {
  try {
    radar.validate();
    batch.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (grid_p < 1 || grid_q < 1) throw ConfigError("grid dimensions must be >= 1");
  for (const auto& t : scene.targets) {
    if (t.range_cell >= grid_p || t.doppler_cell >= grid_q)
      throw ConfigError("target outside the range-Doppler grid");
  }
  for (std::size_t i = 0; i < scene.targets.size(); ++i)
    for (std::size_t j = i + 1; j < scene.targets.size(); ++j)
      if (scene.targets[i].range_cell == scene.targets[j].range_cell &&
          scene.targets[i].doppler_cell == scene.targets[j].doppler_cell)
        throw ConfigError("two targets share a grid cell");
  if (scene.random_k && *scene.random_k == 0) throw ConfigError("random_k must be >= 1");
  if (scene.random_k && *scene.random_k > grid_p * grid_q)
    throw ConfigError("random_k exceeds the number of grid cells");
  if (n_candidates < 2) throw ConfigError("n_candidates must be >= 2");
  if (n_trials < 1) throw ConfigError("n_trials must be >= 1");
  if (sp_max_iter < 1) throw ConfigError("sp_max_iter must be >= 1");
}

ScenarioConfig scenario_va() {
  ScenarioConfig cfg;
  cfg.radar = RadarParams{};
  cfg.grid_p = 4;
  cfg.grid_q = cfg.radar.n_pulses;
  cfg.scene.targets = {{3, 7, {1.0, 0.0}}, {2, 13, {1.0, 0.0}}, {3, 14, {1.0, 0.0}}, {0, 15, {1.0, 0.0}}};
  return cfg;
}

ScenarioConfig default_config(Study study) {
  ScenarioConfig cfg = scenario_va();
  switch (study) {
    case Study::kCrbScatter:
      cfg.n_codes = 100;
      cfg.n_trials = 1000;
      cfg.noise = NoiseSpec{NoiseSpec::Kind::kSnrDb, {20.0}};
      break;
    case Study::kObjectiveCompare:
      cfg.n_codes = 2000;
      break;
    case Study::kConvergence:
      cfg.n_trials = 100;
      break;
    case Study::kBatchCompare:
      cfg.n_trials = 1000;
      cfg.noise = NoiseSpec{NoiseSpec::Kind::kSnrDb, {0.0, 5.0, 10.0, 15.0, 20.0}};
      break;
    case Study::kSequentialCompare:
      cfg.n_trials = 1000;
      cfg.n_designed = 20;
      cfg.noise = NoiseSpec{NoiseSpec::Kind::kSigma2Db, {0.0, 5.0}};
      break;
    case Study::kDeltaFSweep:
      cfg.n_trials = 1000;
      cfg.n_designed = 5;
      cfg.scene = SceneSpec{{}, 4};
      cfg.noise = NoiseSpec{NoiseSpec::Kind::kSigma2Db, {0.0}};
      break;
    case Study::kKSweep:
      cfg.n_trials = 1000;
      cfg.n_designed = 5;
      cfg.scene = SceneSpec{{}, 4};
      cfg.k_list = {1, 2, 3, 4, 5, 6, 7, 8};
      cfg.noise = NoiseSpec{NoiseSpec::Kind::kSigma2Db, {-5.0}};
      break;
  }
  return cfg;
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
  std::map<std::string, std::string, std::less<>> seen;
  for (auto raw : split(text, "\n")) {
    auto line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("expected 'key = value': " + std::string(line));
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError("unknown config key '" + std::string(key) + "'");
    if (seen.contains(key)) throw ConfigError("repeated config key '" + std::string(key) + "'");
    if (value.empty()) throw ConfigError("empty value for '" + std::string(key) + "'");
    seen.emplace(std::string(key), std::string(value));
  }
  if (seen.contains("snr_db") && seen.contains("sigma2_db"))
    throw ConfigError("give exactly one of snr_db and sigma2_db");
  if (seen.contains("targets") && seen.contains("random_k"))
    throw ConfigError("give either targets or random_k, not both");
  for (const auto& [key, value] : seen) setters().find(key)->second(base, value);
  base.validate();
  return base;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

}  // namespace cogrsf::sim
