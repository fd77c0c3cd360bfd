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

#include "quadsweep/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace quadsweep {

namespace {

double Energy(const ObjectiveDescriptor& obj, const SufficientStats& s) {
  const std::optional<double> score = ScoreUnchecked(obj.id, s);
  if (!score) return std::numeric_limits<double>::infinity();
  return obj.direction == Direction::kMaximize ? -*score : *score;
}

double Median(std::vector<double>& v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lower + upper);
}

}  // namespace

SweepResult SimulatedAnnealingSelect(const Dataset& data, std::size_t k,
                                     const ObjectiveDescriptor& obj,
                                     const AnnealConfig& config) {
  const std::size_t n = data.size();
  if (k < obj.min_subset || k > n) {
    throw std::invalid_argument("annealing: k=" + std::to_string(k) +
                                " out of range");
  }
  if (!(config.t_max > config.t_min && config.t_min > 0.0) ||
      config.steps == 0) {
    throw std::invalid_argument(
        "annealing: need t_max > t_min > 0 and steps >= 1");
  }

  Rng rng(config.seed);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::swap(perm[i], perm[i + rng.UniformIndex(n - i)]);
  }
  std::vector<std::size_t> in(perm.begin(), perm.begin() + k);
  std::vector<std::size_t> out(perm.begin() + k, perm.end());

  SufficientStats s;
  for (std::size_t i : in) s.Add(data.x(i), data.y(i));
  double energy = Energy(obj, s);
  double best_energy = energy;
  std::vector<std::size_t> best = in;

  if (!out.empty()) {
    const double t_factor = -std::log(config.t_max / config.t_min);
    for (std::size_t step = 1; step <= config.steps; ++step) {
      const double temperature =
          config.t_max * std::exp(t_factor * static_cast<double>(step) /
                                  static_cast<double>(config.steps));
      const std::size_t a = rng.UniformIndex(k);
      const std::size_t b = rng.UniformIndex(out.size());
      const std::size_t leave = in[a], enter = out[b];
      SufficientStats next = s;
      next.Remove(data.x(leave), data.y(leave));
      next.Add(data.x(enter), data.y(enter));
      const double next_energy = Energy(obj, next);

      const double u = rng.Uniform01();
      bool accept;
      if (std::isinf(next_energy)) {
        accept = std::isinf(energy);
      } else if (std::isinf(energy)) {
        accept = true;
      } else {
        const double delta = next_energy - energy;
        accept = delta <= 0.0 || std::exp(-delta / temperature) >= u;
      }
      if (!accept) continue;

      std::swap(in[a], out[b]);
      s = next;
      energy = next_energy;
      if (energy < best_energy) {
        best_energy = energy;
        best = in;
      }
    }
  }

  SweepResult result;
  std::sort(best.begin(), best.end());
  result.indices = std::move(best);
  result.score = Score(obj, StatsFromSubset(data, result.indices));
  result.candidates_scored = config.steps;
  return result;
}

RansacResult RansacLine(const Dataset& data, const RansacConfig& config) {
  const std::size_t n = data.size();
  if (n < 2) throw std::invalid_argument("ransac: need at least 2 points");
  if (config.iterations == 0) {
    throw std::invalid_argument("ransac: iterations must be positive");
  }

  Rng rng(config.seed);
  RansacResult result;
  std::vector<std::size_t> consensus;
  for (std::size_t it = 0; it < config.iterations; ++it) {
    const std::size_t i = rng.UniformIndex(n);
    std::size_t j = rng.UniformIndex(n - 1);
    if (j >= i) ++j;
    const double dx = data.x(j) - data.x(i);
    if (dx == 0.0) {
      ++result.degenerate_samples;
      continue;
    }
    const double slope = (data.y(j) - data.y(i)) / dx;
    const double intercept = data.y(i) - slope * data.x(i);
    consensus.clear();
    for (std::size_t t = 0; t < n; ++t) {
      const double r = data.y(t) - (slope * data.x(t) + intercept);
      if (std::abs(r) <= config.residual_threshold) consensus.push_back(t);
    }
    if (consensus.size() >= config.min_inliers &&
        consensus.size() > result.consensus.size()) {
      result.consensus = consensus;
      result.line = {slope, intercept};
      result.success = true;
    }
  }
  if (!result.success) return result;

  const SufficientStats s = StatsFromSubset(data, result.consensus);
  if (s.ssd_x() > kZeroVarianceTolerance) {
    const double slope = s.sp_xy() / s.ssd_x();
    result.line = {slope, (s.s_y - slope * s.s_x) / static_cast<double>(s.count)};
  }
  return result;
}

TheilSenResult TheilSen(const Dataset& data) {
  const std::size_t n = data.size();
  std::vector<double> slopes;
  slopes.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = data.x(j) - data.x(i);
      if (dx == 0.0) continue;
      slopes.push_back((data.y(j) - data.y(i)) / dx);
    }
  }
  TheilSenResult result;
  if (slopes.empty()) return result;
  result.line.slope = Median(slopes);
  std::vector<double> offsets(n);
  for (std::size_t i = 0; i < n; ++i) {
    offsets[i] = data.y(i) - result.line.slope * data.x(i);
  }
  result.line.intercept = Median(offsets);
  result.success = true;
  return result;
}

std::optional<double> PredictiveR2(const Dataset& data, const LineFit& line) {
  double mean = 0.0;
  for (double y : data.ys()) mean += y;
  mean /= static_cast<double>(data.size());
  double sse = 0.0, sst = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double r = data.y(i) - (line.slope * data.x(i) + line.intercept);
    sse += r * r;
    sst += (data.y(i) - mean) * (data.y(i) - mean);
  }
  if (sst <= kZeroVarianceTolerance) return std::nullopt;
  return 1.0 - sse / sst;
}

}  // namespace quadsweep
