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

#ifndef QUADSWEEP_EXPERIMENT_HPP_
#define QUADSWEEP_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quadsweep/baselines.hpp"
#include "quadsweep/geometry.hpp"
#include "quadsweep/oracle.hpp"
#include "quadsweep/random.hpp"
#include "quadsweep/stats.hpp"

namespace quadsweep {

// git-describe style build identifier.
std::string_view Version();

enum class ExperimentKind { kSeparability, kOptimality, kTiming };
enum class Method { kSweep, kAnnealing, kLts, kRansac, kTheilSen };

std::string_view ExperimentName(ExperimentKind kind);
ExperimentKind ParseExperiment(std::string_view name);
std::string_view MethodName(Method method);
Method ParseMethod(std::string_view name);

// ceil(n / 2)
inline std::size_t DefaultK(std::size_t n) { return (n + 1) / 2; }

struct TrialRecord {
  std::size_t trial_id = 0;
  Seed128 seed;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string objective;
  std::string method;
  // Absent where a method has no fixed-size output.
  std::optional<bool> success;
  std::optional<double> score_ratio;
  std::int64_t wall_time_ns = 0;
  // Separability trials only.
  std::optional<double> distance_sq;
  std::optional<double> gap;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kOptimality;
  std::vector<std::size_t> n_values;
  // Fixed subset size; ceil(n/2) when unset.
  std::optional<std::size_t> k;
  std::size_t trials = 100;
  Seed128 primary_seed = Seed128::FromU64(123);
  std::vector<ObjectiveId> objectives;
  std::vector<LiftId> lifts;
  std::vector<Method> methods;
  // 0 means WorkerCount(). Never affects results.
  int threads = 0;
  HullDistanceOptions hull;
  AnnealConfig anneal;
  std::size_t ransac_iterations = 100;
  double ransac_threshold = 0.1;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  // Timing trials at or below this n are checked against the oracle.
  std::size_t timing_oracle_max_n = 20;

  static ExperimentConfig Defaults(ExperimentKind kind);
  std::size_t KFor(std::size_t n) const { return k ? *k : DefaultK(n); }
};

struct SeparabilityCell {
  ObjectiveId objective = ObjectiveId::kR2;
  LiftId lift = LiftId::kL5;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double min_distance_sq = 0.0;
  double max_gap = 0.0;
  // Trials whose separation is proven by a hyperplane with margin above
  // epsilon.
  std::size_t certified = 0;
  std::size_t not_converged = 0;
};

struct OptimalityCell {
  Method method = Method::kSweep;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::optional<std::size_t> successes;
  std::optional<double> success_rate;
  std::optional<double> mean_ratio;
  bool skipped = false;
  std::string notice;
};

struct TimingRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 0;
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
  std::size_t oracle_checked = 0;
  std::size_t oracle_matches = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<SeparabilityCell> separability;
  std::vector<OptimalityCell> optimality;
  std::vector<TimingRow> timing;
  // Sorted by (n, trial_id) and then by cell order.
  std::vector<TrialRecord> trials;
};

// Ground truth by brute force, then hull-distance separability of the
// optimal subset from its complement, per (objective, lift) cell.
ExperimentReport RunSeparabilityExperiment(const ExperimentConfig& config);
// Success rate and R² ratio of each method against the brute-force R²
// optimum, per (method, n).
ExperimentReport RunOptimalityExperiment(const ExperimentConfig& config);
// Wall time of the R² sweep per n. Trials run one at a time; the first
// trial of each n is repeated once as an untimed warm-up.
ExperimentReport RunTimingExperiment(const ExperimentConfig& config);
ExperimentReport RunExperiment(const ExperimentConfig& config);

nlohmann::json ToJson(const TrialRecord& record);
nlohmann::json ToJson(const ExperimentReport& report);
// Header n,k,trials,mean_ms,median_ms,min_ms,max_ms,oracle_checked,oracle_matches
std::string TimingCsv(const ExperimentReport& report);

// Least-squares slope of log(y) against log(x).
double LogLogSlope(std::span<const double> x, std::span<const double> y);

}  // namespace quadsweep

#endif  // QUADSWEEP_EXPERIMENT_HPP_
