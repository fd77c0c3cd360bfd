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

#ifndef QUADSWEEP_SWEEP_HPP_
#define QUADSWEEP_SWEEP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quadsweep/geometry.hpp"
#include "quadsweep/stats.hpp"

namespace quadsweep {

struct SweepResult {
  // Sorted, 0-based.
  std::vector<std::size_t> indices;
  // Recomputed from scratch over `indices` (ascending summation order).
  // nullopt when every candidate was INVALID.
  std::optional<double> score;
  std::uint64_t tuples_examined = 0;
  std::uint64_t degenerate_tuples = 0;
  std::uint64_t candidates_scored = 0;
  // The tuple hyperplane whose projection produced the winner, in lifted
  // coordinates. Absent for brute-force and sorting-based results.
  std::optional<Hyperplane> hyperplane;
  bool used_fallback = false;
};

struct SweepOptions {
  // Worker threads for the tuple enumeration. 0 means WorkerCount().
  int threads = 1;
  // Largest n for which a fully degenerate input falls back to brute force.
  std::size_t fallback_max_n = 20;
};

// Exhaustive sweep over hyperplanes through every d-tuple of lifted points.
// For each nondegenerate tuple the complement is ordered by its projection
// onto the hyperplane normal (both orientations) and every subset of the
// tuple is completed with the matching prefix of that order.
//
// Throws std::invalid_argument when k is outside [obj.min_subset, n] or when
// n < d + 1, and std::runtime_error when every tuple is degenerate and n
// exceeds the fallback limit.
SweepResult NaiveQuadraticSweep(const Dataset& data, std::size_t k,
                                const ObjectiveDescriptor& obj,
                                const SweepOptions& options = {});

// Minimum sum of squared deviations over k-subsets of xs: sort, then slide a
// width-k window. O(n log n). Throws std::invalid_argument unless
// 2 <= k <= xs.size() and all values are finite.
SweepResult SlidingWindowVariance(std::span<const double> xs, std::size_t k);

// Lexicographic order on sorted index sets; the tie-break among equal scores.
bool LexicographicallyLess(std::span<const std::size_t> a,
                           std::span<const std::size_t> b);

}  // namespace quadsweep

#endif  // QUADSWEEP_SWEEP_HPP_
