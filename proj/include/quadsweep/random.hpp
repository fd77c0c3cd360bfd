// Copyright 2026 The QuadSweep Authors
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

#ifndef QUADSWEEP_RANDOM_HPP_
#define QUADSWEEP_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "quadsweep/stats.hpp"

namespace quadsweep {

struct Seed128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  static Seed128 FromU64(std::uint64_t v) { return {0, v}; }
  // "0x"-prefixed hex (up to 32 digits) or unsigned decimal below 2^128.
  // Throws std::invalid_argument.
  static Seed128 Parse(std::string_view text);
  // 32 lowercase hex digits with a 0x prefix.
  std::string ToHex() const;

  friend bool operator==(const Seed128&, const Seed128&) = default;
};

// Mersenne Twister (64-bit) initialised from all four 32-bit words of a
// 128-bit seed. Derived quantities avoid std distributions so streams are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(Seed128 seed);

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  // Uniform on {0, ..., n-1}; n must be positive.
  std::size_t UniformIndex(std::size_t n);
  Seed128 NextSeed() {
    const std::uint64_t hi = engine_();
    return {hi, engine_()};
  }

 private:
  std::mt19937_64 engine_;
};

// Independent child seed for a named sub-stream of a trial.
Seed128 DeriveSeed(Seed128 parent, std::uint64_t stream);

// The first `count` per-trial seeds drawn from the primary stream. Trial i
// always receives the i-th draw.
std::vector<Seed128> TrialSeeds(Seed128 primary, std::size_t count);

// X and Y i.i.d. uniform on [0, 1).
Dataset GenerateDataset(Seed128 seed, std::size_t n);

}  // namespace quadsweep

#endif  // QUADSWEEP_RANDOM_HPP_
