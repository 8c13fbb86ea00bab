// Copyright 2026 The qoptics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

namespace qoptics {

using Engine = std::mt19937_64;

/// Engine for one chunk of a seeded stream. Streams are cut into fixed-size
/// chunks and chunk k always draws from derive_engine(seed, k), so the
/// concatenated output does not depend on how chunks are scheduled.
inline Engine derive_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x9e3779b9u};
  return Engine(seq);
}

inline constexpr std::size_t kChunkSize = 4096;

/// Calls fill(engine, begin, end) for each chunk of [0, count).
template <typename Fill>
void for_each_chunk(std::uint64_t seed, std::size_t count, Fill&& fill) {
  for (std::size_t chunk = 0; chunk * kChunkSize < count; ++chunk) {
    Engine engine = derive_engine(seed, chunk);
    const std::size_t begin = chunk * kChunkSize;
    const std::size_t end = std::min(count, begin + kChunkSize);
    fill(engine, begin, end);
  }
}

}  // namespace qoptics
