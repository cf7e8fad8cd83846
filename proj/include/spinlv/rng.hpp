// Copyright 2026 The spinlv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

// Deterministic random streams. Every stochastic routine derives an
// independent substream from (seed, stream ids); results are therefore
// independent of evaluation order and reproducible bit-for-bit.

namespace spinlv::rng {

// Recorded in JSON reports next to the seed.
inline constexpr const char* kAlgorithm = "mt19937_64+splitmix64/v1";

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Folds the ids into the base seed one at a time.
inline std::uint64_t substream(std::uint64_t seed,
                               std::initializer_list<std::uint64_t> ids) {
  std::uint64_t s = splitmix64(seed);
  for (std::uint64_t id : ids) {
    s = splitmix64(s ^ splitmix64(id));
  }
  return s;
}

inline std::mt19937_64 engine(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> ids) {
  return std::mt19937_64(substream(seed, ids));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace spinlv::rng
