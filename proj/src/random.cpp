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

#include "quadsweep/random.hpp"

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>

namespace quadsweep {

Seed128 Seed128::Parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("seed: empty string");
  unsigned __int128 value = 0;
  const unsigned __int128 max = ~static_cast<unsigned __int128>(0);
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::string_view digits = text.substr(2);
    if (digits.size() > 32) throw std::invalid_argument("seed: too many hex digits");
    for (char ch : digits) {
      int v;
      if (ch >= '0' && ch <= '9') v = ch - '0';
      else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
      else throw std::invalid_argument("seed: bad hex digit in '" + std::string(text) + "'");
      value = (value << 4) | static_cast<unsigned>(v);
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("seed: bad decimal digit in '" + std::string(text) + "'");
      }
      const unsigned d = static_cast<unsigned>(ch - '0');
      if (value > (max - d) / 10) throw std::invalid_argument("seed: exceeds 128 bits");
      value = value * 10 + d;
    }
  }
  return {static_cast<std::uint64_t>(value >> 64), static_cast<std::uint64_t>(value)};
}

std::string Seed128::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "0x";
  for (int shift = 60; shift >= 0; shift -= 4) out += kDigits[(hi >> shift) & 0xf];
  for (int shift = 60; shift >= 0; shift -= 4) out += kDigits[(lo >> shift) & 0xf];
  return out;
}

Rng::Rng(Seed128 seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.hi >> 32),
                    static_cast<std::uint32_t>(seed.hi),
                    static_cast<std::uint32_t>(seed.lo >> 32),
                    static_cast<std::uint32_t>(seed.lo)};
  engine_.seed(seq);
}

std::size_t Rng::UniformIndex(std::size_t n) {
  if (n == 0) throw std::invalid_argument("UniformIndex: empty range");
  const std::uint64_t range = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return static_cast<std::size_t>(v % range);
}

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Seed128 DeriveSeed(Seed128 parent, std::uint64_t stream) {
  Rng rng({parent.hi ^ SplitMix64(stream), parent.lo ^ SplitMix64(~stream)});
  return rng.NextSeed();
}

std::vector<Seed128> TrialSeeds(Seed128 primary, std::size_t count) {
  Rng rng(primary);
  std::vector<Seed128> seeds;
  seeds.reserve(count);
  for (std::size_t i = 0; i < count; ++i) seeds.push_back(rng.NextSeed());
  return seeds;
}

Dataset GenerateDataset(Seed128 seed, std::size_t n) {
  if (n == 0) throw std::invalid_argument("GenerateDataset: n must be positive");
  Rng rng(seed);
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = rng.Uniform01();
  for (std::size_t i = 0; i < n; ++i) ys[i] = rng.Uniform01();
  return Dataset(std::move(xs), std::move(ys));
}

}  // namespace quadsweep
