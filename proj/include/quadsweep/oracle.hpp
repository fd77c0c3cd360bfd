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

#ifndef QUADSWEEP_ORACLE_HPP_
#define QUADSWEEP_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "quadsweep/stats.hpp"
#include "quadsweep/sweep.hpp"

namespace quadsweep {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ground truth by visiting all C(n, k) subsets in revolving-door order, one
// add and one remove per step. Ties go to the lexicographically smallest
// subset. Throws BudgetExceeded when C(n, k) > budget and
// std::invalid_argument for k outside [obj.min_subset, n].
SweepResult BruteForceSelect(const Dataset& data, std::size_t k,
                             const ObjectiveDescriptor& obj,
                             std::uint64_t budget = kDefaultOracleBudget);

// Least trimmed squares: the k-subset whose own least-squares line has the
// smallest residual sum of squares. `score` holds that residual. Requires
// 3 <= k <= n.
SweepResult LtsBruteForce(const Dataset& data, std::size_t k,
                          std::uint64_t budget = kDefaultOracleBudget);

}  // namespace quadsweep

#endif  // QUADSWEEP_ORACLE_HPP_
