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

#ifndef QUADSWEEP_BASELINES_HPP_
#define QUADSWEEP_BASELINES_HPP_

#include <cstddef>
#include <vector>

#include "quadsweep/random.hpp"
#include "quadsweep/stats.hpp"
#include "quadsweep/sweep.hpp"

namespace quadsweep {

struct AnnealConfig {
  double t_max = 100000.0;
  double t_min = 1.0;
  std::size_t steps = 10000;
  Seed128 seed;
};

// Metropolis annealing over k-subsets. A move swaps a uniformly chosen
// member with a uniformly chosen non-member; the temperature decays
// exponentially from t_max to t_min. Energy is the objective score negated
// for maximization, +inf for INVALID. Returns the best state visited.
// Throws std::invalid_argument for a bad k or config.
SweepResult SimulatedAnnealingSelect(const Dataset& data, std::size_t k,
                                     const ObjectiveDescriptor& obj,
                                     const AnnealConfig& config);

struct RansacConfig {
  std::size_t iterations = 100;
  std::size_t min_inliers = 2;
  // Vertical residual |y - (m x + c)| counted as consensus.
  double residual_threshold = 0.1;
  Seed128 seed;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

struct RansacResult {
  bool success = false;
  LineFit line;
  // Sorted consensus set of the winning sample, empty on failure.
  std::vector<std::size_t> consensus;
  std::size_t degenerate_samples = 0;
};

// Two-point RANSAC. Keeps the largest consensus set with at least
// min_inliers members and refits least squares on it. Fails when no sample
// reaches min_inliers (including when every sample is degenerate).
RansacResult RansacLine(const Dataset& data, const RansacConfig& config);

struct TheilSenResult {
  bool success = false;
  LineFit line;
};

// Median of pairwise slopes (pairs with equal x skipped), intercept the
// median of y - slope x. Even-length medians average the middle pair.
TheilSenResult TheilSen(const Dataset& data);

// 1 - SSE/SST of a fixed line over the whole dataset; can be negative.
// nullopt when y has no spread.
std::optional<double> PredictiveR2(const Dataset& data, const LineFit& line);

}  // namespace quadsweep

#endif  // QUADSWEEP_BASELINES_HPP_
