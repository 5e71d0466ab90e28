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

#include <benchmark/benchmark.h>

#include <random>

#include "cogrsf/batch_design.hpp"
#include "cogrsf/radar_model.hpp"
#include "cogrsf/sequential_design.hpp"
#include "cogrsf/sparse_recovery.hpp"

namespace {

using namespace cogrsf;

struct Setup {
  RadarParams params;
  RangeDopplerGrid grid = make_grid(params, 4, 20);
  SupportSet support{grid.index(3, 7), grid.index(2, 13), grid.index(3, 14), grid.index(0, 15)};
  std::mt19937_64 rng{42};
};

void BM_BuildDictionary(benchmark::State& state) {
  Setup s;
  const auto codes = random_codes(20, s.rng);
  for (auto _ : state) benchmark::DoNotOptimize(build_dictionary(s.grid, codes, s.params));
}
BENCHMARK(BM_BuildDictionary);

void BM_SubspacePursuit(benchmark::State& state) {
  Setup s;
  const auto codes = random_codes(20, s.rng);
  const CMatrix dict = build_dictionary(s.grid, codes, s.params);
  CVector x = CVector::Zero(dict.cols());
  for (std::size_t l : s.support) x[static_cast<Eigen::Index>(l)] = 1.0;
  auto noisy = add_noise(CVector(dict * x), 0.05, s.rng);
  for (auto _ : state) benchmark::DoNotOptimize(subspace_pursuit(noisy, dict, 4));
}
BENCHMARK(BM_SubspacePursuit);

void BM_Lb2Gradient(benchmark::State& state) {
  Setup s;
  const auto codes = random_codes(20, s.rng);
  std::vector<double> z(20);
  for (std::size_t i = 0; i < 20; ++i) z[i] = code_to_z(codes[i], 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(lb2_gradient(z, s.support, s.grid, s.params, 0.1));
}
BENCHMARK(BM_Lb2Gradient);

void BM_DesignBatch(benchmark::State& state) {
  Setup s;
  const auto codes = random_codes(20, s.rng);
  for (auto _ : state) benchmark::DoNotOptimize(design_batch(codes, s.support, s.grid, s.params));
}
BENCHMARK(BM_DesignBatch)->Unit(benchmark::kMillisecond);

void BM_DesignNextCode(benchmark::State& state) {
  Setup s;
  const auto seq = make_sequential_state(random_codes(20, s.rng), s.support, s.grid, s.params);
  const auto mode = static_cast<SequentialMode>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(design_next_code(seq, mode, s.support, s.grid, s.params));
}
BENCHMARK(BM_DesignNextCode)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
