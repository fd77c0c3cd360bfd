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

#include "quadsweep/oracle.hpp"

#include <string>
#include <vector>

#include "quadsweep/combinations.hpp"

namespace quadsweep {

namespace {

template <typename ScoreFn>
SweepResult Enumerate(const Dataset& data, std::size_t k, Direction direction,
                      std::uint64_t budget, ScoreFn score_fn) {
  const std::size_t n = data.size();
  const std::uint64_t total = Binomial(n, k);
  if (total > budget) {
    throw BudgetExceeded("oracle: C(" + std::to_string(n) + ", " +
                         std::to_string(k) + ") = " + std::to_string(total) +
                         " subsets exceeds the budget of " +
                         std::to_string(budget));
  }

  RevolvingDoor door(n, k);
  SufficientStats s;
  for (std::size_t i : door.current()) s.Add(data.x(i), data.y(i));

  std::optional<double> best_score = score_fn(s);
  std::vector<std::size_t> best(door.current().begin(), door.current().end());
  std::uint64_t visited = 1;
  while (const auto swap = door.Next()) {
    s.Remove(data.x(swap->out), data.y(swap->out));
    s.Add(data.x(swap->in), data.y(swap->in));
    ++visited;
    const std::optional<double> score = score_fn(s);
    const Preference pref = Compare(direction, score, best_score);
    if (pref == Preference::kFirst ||
        (pref == Preference::kEqual &&
         LexicographicallyLess(door.current(), best))) {
      best_score = score;
      best.assign(door.current().begin(), door.current().end());
    }
  }

  SweepResult result;
  result.indices = std::move(best);
  result.candidates_scored = visited;
  return result;
}

}  // namespace

SweepResult BruteForceSelect(const Dataset& data, std::size_t k,
                             const ObjectiveDescriptor& obj,
                             std::uint64_t budget) {
  if (k < obj.min_subset || k > data.size()) {
    throw std::invalid_argument("oracle: k=" + std::to_string(k) +
                                " outside [" + std::to_string(obj.min_subset) +
                                ", " + std::to_string(data.size()) + "]");
  }
  SweepResult result =
      Enumerate(data, k, obj.direction, budget,
                [id = obj.id](const SufficientStats& s) {
                  return ScoreUnchecked(id, s);
                });
  result.score = Score(obj, StatsFromSubset(data, result.indices));
  return result;
}

SweepResult LtsBruteForce(const Dataset& data, std::size_t k,
                          std::uint64_t budget) {
  if (k < 3 || k > data.size()) {
    throw std::invalid_argument("lts: need 3 <= k <= n");
  }
  SweepResult result = Enumerate(data, k, Direction::kMinimize, budget,
                                 [](const SufficientStats& s) {
                                   return LeastSquaresResidual(s);
                                 });
  result.score = LeastSquaresResidual(StatsFromSubset(data, result.indices));
  return result;
}

}  // namespace quadsweep
