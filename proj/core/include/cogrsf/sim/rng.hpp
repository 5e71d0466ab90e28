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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace cogrsf::sim {

using RngStream = std::mt19937_64;

/// Independent purposes a trial draws random numbers for.
enum class StreamTag : std::uint32_t {
  kCodes = 1,
  kNoise = 2,
  kSecondNoise = 3,
  kScene = 4,
  kRandomMode = 5,
  kPredefined = 6,
};

/// Stream keyed by (seed, tag, ids...). Distinct keys give unrelated sequences,
/// so trial execution order never changes what a trial sees.
inline RngStream make_stream(std::uint64_t seed, StreamTag tag,
                             std::initializer_list<std::uint64_t> ids = {}) {
  std::vector<std::uint32_t> words;
  words.reserve(4 + 2 * ids.size());
  words.push_back(static_cast<std::uint32_t>(seed));
  words.push_back(static_cast<std::uint32_t>(seed >> 32));
  words.push_back(static_cast<std::uint32_t>(tag));
  words.push_back(static_cast<std::uint32_t>(ids.size()));
  for (std::uint64_t id : ids) {
    words.push_back(static_cast<std::uint32_t>(id));
    words.push_back(static_cast<std::uint32_t>(id >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return RngStream(seq);
}

}  // namespace cogrsf::sim
