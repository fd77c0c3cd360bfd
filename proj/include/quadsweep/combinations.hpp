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

#ifndef QUADSWEEP_COMBINATIONS_HPP_
#define QUADSWEEP_COMBINATIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace quadsweep {

// C(n, k), saturating at UINT64_MAX.
std::uint64_t Binomial(std::size_t n, std::size_t k);

// Revolving-door (minimal change) order over k-subsets of {0, ..., n-1}:
// consecutive subsets differ by exactly one element leaving and one entering.
// Iterative form of Knuth's Algorithm R (TAOCP 7.2.1.3).
class RevolvingDoor {
 public:
  struct Swap {
    std::size_t out;
    std::size_t in;
  };

  RevolvingDoor(std::size_t n, std::size_t k);

  // Current subset, sorted ascending.
  std::span<const std::size_t> current() const {
    return {c_.data() + 1, k_};
  }
  // Advances to the next subset; nullopt once every subset was visited.
  std::optional<Swap> Next();

 private:
  std::size_t n_;
  std::size_t k_;
  // c_[1..k] in Knuth's notation (c_1 < ... < c_k), c_[k+1] = n.
  std::vector<std::size_t> c_;
  bool done_ = false;
};

}  // namespace quadsweep

#endif  // QUADSWEEP_COMBINATIONS_HPP_
