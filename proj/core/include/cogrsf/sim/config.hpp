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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cogrsf/batch_design.hpp"
#include "cogrsf/radar_model.hpp"

namespace cogrsf::sim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Study {
  kCrbScatter,
  kObjectiveCompare,
  kConvergence,
  kBatchCompare,
  kSequentialCompare,
  kDeltaFSweep,
  kKSweep,
};

/// CLI subcommand name, e.g. "crb-scatter".
std::string_view study_name(Study study);
std::optional<Study> parse_study(std::string_view name);
const std::vector<Study>& all_studies();

enum class CodeMode {
  kPredefinedRandom,
  kBatchAdaptive,
  kSequentialMode1,
  kSequentialMode2,
};

std::string_view code_mode_name(CodeMode mode);

/// A target given by grid cell (range index m, Doppler index n).
struct GridTarget {
  std::size_t range_cell = 0;
  std::size_t doppler_cell = 0;
  Complex gamma{1.0, 0.0};
};

/// Either explicit targets or K cells drawn uniformly without replacement.
struct SceneSpec {
  std::vector<GridTarget> targets;
  std::optional<std::size_t> random_k;
};

struct NoiseSpec {
  enum class Kind { kSnrDb, kSigma2Db };
  Kind kind = Kind::kSnrDb;
  std::vector<double> values_db;
};

struct ScenarioConfig {
  RadarParams radar;
  std::size_t grid_p = 4;
  std::size_t grid_q = 20;
  SceneSpec scene;
  /// Modes to run; empty means every mode the study supports.
  std::vector<CodeMode> code_modes;
  std::optional<NoiseSpec> noise;
  std::size_t n_trials = 1000;
  std::uint64_t seed = 1;
  std::string output;

  std::size_t n_codes = 100;
  std::size_t sp_max_iter = 50;
  BatchDesignConfig batch;
  std::size_t n_designed = 20;
  std::size_t n_candidates = 1024;
  std::vector<double> delta_f_list;
  std::size_t delta_f_points = 6;
  std::vector<std::size_t> k_list;
  /// Worker threads for trial execution; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  void validate() const;
};

/// Canonical four-target scene on the default radar and a 4 x 20 grid.
ScenarioConfig scenario_va();

/// scenario_va() plus the trial counts and sweeps each study uses by default.
ScenarioConfig default_config(Study study);

/// Applies `key = value` lines on top of `base`. `#` starts a comment.
/// Unknown or repeated keys and malformed values raise ConfigError.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base);
ScenarioConfig load_config(const std::string& path, ScenarioConfig base);

}  // namespace cogrsf::sim
