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

#include "quadsweep/combinations.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadsweep {

std::uint64_t Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

RevolvingDoor::RevolvingDoor(std::size_t n, std::size_t k)
    : n_(n), k_(k), c_(k + 2) {
  if (k > n) throw std::invalid_argument("RevolvingDoor: k exceeds n");
  for (std::size_t j = 1; j <= k; ++j) c_[j] = j - 1;
  c_[k + 1] = n;
  done_ = k == 0 || k == n;
}

std::optional<RevolvingDoor::Swap> RevolvingDoor::Next() {
  if (done_) return std::nullopt;
  std::vector<std::size_t>& c = c_;
  const std::size_t t = k_;
  std::size_t j = 2;

  if (t % 2 == 1) {
    if (c[1] + 1 < c[2]) {
      ++c[1];
      return Swap{c[1] - 1, c[1]};
    }
  } else {
    if (c[1] > 0) {
      --c[1];
      return Swap{c[1] + 1, c[1]};
    }
    goto increase;
  }

decrease:  // here c[j] == c[j-1] + 1
  if (j > t) {
    done_ = true;
    return std::nullopt;
  }
  if (c[j] >= j) {
    const std::size_t out = c[j];
    c[j] = c[j - 1];
    c[j - 1] = j - 2;
    return Swap{out, j - 2};
  }
  ++j;

increase:  // here c[j-1] == j - 2
  if (j > t) {
    done_ = true;
    return std::nullopt;
  }
  if (c[j] + 1 < c[j + 1]) {
    const std::size_t out = c[j - 1];
    c[j - 1] = c[j];
    ++c[j];
    return Swap{out, c[j]};
  }
  ++j;
  goto decrease;
}

}  // namespace quadsweep
