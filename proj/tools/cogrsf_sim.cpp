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

// Monte-Carlo simulator front-end: one subcommand per study, CSV out.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cogrsf/sim/config.hpp"
#include "cogrsf/sim/studies.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> threads;
  std::string out;
};

int run(cogrsf::sim::Study study, const CommonFlags& flags) {
  using namespace cogrsf::sim;
  ScenarioConfig cfg = default_config(study);
  if (!flags.config_path.empty()) cfg = load_config(flags.config_path, std::move(cfg));
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.trials) cfg.n_trials = *flags.trials;
  if (flags.threads) cfg.threads = *flags.threads;
  const std::string out_path = flags.out.empty() ? cfg.output : flags.out;

  const auto start = std::chrono::steady_clock::now();
  const Table table = run_study(study, cfg);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (out_path.empty() || out_path == "-") {
    write_csv(std::cout, table);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
    write_csv(file, table);
    if (!file) {
      std::cerr << "error: failed writing '" << out_path << "'\n";
      return 1;
    }
  }
  std::cerr << study_name(study) << ": " << table.rows.size() << " rows in " << seconds << " s";
  if (!out_path.empty() && out_path != "-") std::cerr << " -> " << out_path;
  std::cerr << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cogrsf::sim;
  CLI::App app{"Cognitive random stepped frequency radar simulator"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::optional<Study> chosen;
  for (Study study : all_studies()) {
    std::string description;
    switch (study) {
      case Study::kCrbScatter: description = "MSE of SP recovery versus the normalized CRB for random codes"; break;
      case Study::kObjectiveCompare: description = "LB versus LB2 for random codes"; break;
      case Study::kConvergence: description = "Mean LB2 versus steepest-descent iteration"; break;
      case Study::kBatchCompare: description = "Predefined versus batch-designed codes over SNR"; break;
      case Study::kSequentialCompare: description = "Random versus sequential designs over pulse count"; break;
      case Study::kDeltaFSweep: description = "Random versus sequential designs over frequency step"; break;
      case Study::kKSweep: description = "Random versus sequential designs over target count"; break;
    }
    auto* sub = app.add_subcommand(std::string(study_name(study)), description);
    sub->add_option("--config", flags.config_path, "key = value scenario file")->check(CLI::ExistingFile);
    sub->add_option("--seed", flags.seed, "RNG seed");
    sub->add_option("--trials", flags.trials, "Monte-Carlo trials");
    sub->add_option("--threads", flags.threads, "worker threads (0 = all cores)");
    sub->add_option("--out", flags.out, "output CSV path ('-' for stdout)");
    sub->callback([&chosen, study] { chosen = study; });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return run(*chosen, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
