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

#include "quadsweep/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quadsweep/combinations.hpp"
#include "quadsweep/io.hpp"
#include "quadsweep/lifting.hpp"
#include "quadsweep/parallel.hpp"
#include "quadsweep/sweep.hpp"

#ifndef QUADSWEEP_VERSION
#define QUADSWEEP_VERSION "0.1.0"
#endif

namespace quadsweep {

std::string_view Version() { return QUADSWEEP_VERSION; }

std::string_view ExperimentName(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kSeparability: return "separability";
    case ExperimentKind::kOptimality: return "optimality";
    case ExperimentKind::kTiming: return "timing";
  }
  return "?";
}

ExperimentKind ParseExperiment(std::string_view name) {
  for (auto kind : {ExperimentKind::kSeparability, ExperimentKind::kOptimality,
                    ExperimentKind::kTiming}) {
    if (ExperimentName(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown experiment '" + std::string(name) +
                              "' (expected separability, optimality or timing)");
}

std::string_view MethodName(Method method) {
  switch (method) {
    case Method::kSweep: return "sweep";
    case Method::kAnnealing: return "annealing";
    case Method::kLts: return "lts";
    case Method::kRansac: return "ransac";
    case Method::kTheilSen: return "theil_sen";
  }
  return "?";
}

Method ParseMethod(std::string_view name) {
  for (auto m : {Method::kSweep, Method::kAnnealing, Method::kLts,
                 Method::kRansac, Method::kTheilSen}) {
    if (MethodName(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

ExperimentConfig ExperimentConfig::Defaults(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ExperimentKind::kSeparability:
      cfg.n_values = {20};
      cfg.k = 10;
      cfg.trials = 100;
      cfg.objectives = {ObjectiveId::kR, ObjectiveId::kR2, ObjectiveId::kCov,
                        ObjectiveId::kTv, ObjectiveId::kDv};
      cfg.lifts = {LiftId::kL5, LiftId::kL4};
      break;
    case ExperimentKind::kOptimality:
      cfg.n_values = {15, 20, 25};
      cfg.trials = 200;
      cfg.objectives = {ObjectiveId::kR2};
      cfg.methods = {Method::kSweep, Method::kAnnealing, Method::kLts,
                     Method::kRansac, Method::kTheilSen};
      break;
    case ExperimentKind::kTiming:
      for (std::size_t n = 10; n <= 30; ++n) cfg.n_values.push_back(n);
      cfg.trials = 100;
      cfg.objectives = {ObjectiveId::kR2};
      cfg.methods = {Method::kSweep};
      break;
  }
  return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ElapsedNs(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              start)
      .count();
}

// Relative agreement with the optimum; an exact match of the same subset
// gives a ratio of exactly 1.
constexpr double kSuccessTolerance = 1e-9;

double Ratio(std::optional<double> score, double truth) {
  return score ? *score / truth : 0.0;
}

std::size_t MaxN(const ExperimentConfig& cfg) {
  if (cfg.n_values.empty()) {
    throw std::invalid_argument("experiment: no n values configured");
  }
  for (std::size_t n : cfg.n_values) {
    if (cfg.KFor(n) > n) throw std::invalid_argument("experiment: k exceeds n");
  }
  if (cfg.trials == 0) throw std::invalid_argument("experiment: trials must be >= 1");
  return *std::max_element(cfg.n_values.begin(), cfg.n_values.end());
}

}  // namespace

ExperimentReport RunSeparabilityExperiment(const ExperimentConfig& cfg) {
  MaxN(cfg);
  ExperimentReport report;
  report.config = cfg;
  const std::vector<Seed128> seeds = TrialSeeds(cfg.primary_seed, cfg.trials);
  HullDistanceOptions hull = cfg.hull;
  const std::size_t lifts = cfg.lifts.size();
  const std::size_t cells = cfg.objectives.size() * lifts;

  for (std::size_t n : cfg.n_values) {
    const std::size_t k = cfg.KFor(n);
    std::vector<TrialRecord> records(cfg.trials * cells);
    std::vector<SeparabilityReport> sep(cfg.trials * cells);
    ParallelFor(cfg.trials, cfg.threads, [&](std::size_t trial) {
      const Dataset data = GenerateDataset(seeds[trial], n);
      for (std::size_t o = 0; o < cfg.objectives.size(); ++o) {
        const ObjectiveDescriptor& obj = Objective(cfg.objectives[o]);
        const SweepResult truth = BruteForceSelect(data, k, obj, cfg.oracle_budget);
        for (std::size_t l = 0; l < lifts; ++l) {
          const auto start = Clock::now();
          SeparabilityReport r =
              CheckSeparability(data, truth.indices, cfg.lifts[l], hull, obj.frame);
          const std::size_t slot = trial * cells + o * lifts + l;
          TrialRecord& rec = records[slot];
          rec.wall_time_ns = ElapsedNs(start);
          rec.trial_id = trial;
          rec.seed = seeds[trial];
          rec.n = n;
          rec.k = k;
          rec.objective = ObjectiveName(obj.id);
          rec.method = "hull_distance_" + std::string(LiftName(cfg.lifts[l]));
          rec.success = r.separable;
          rec.distance_sq = r.distance_sq;
          rec.gap = r.gap;
          sep[slot] = std::move(r);
        }
      }
    });

    for (std::size_t o = 0; o < cfg.objectives.size(); ++o) {
      for (std::size_t l = 0; l < lifts; ++l) {
        SeparabilityCell cell;
        cell.objective = cfg.objectives[o];
        cell.lift = cfg.lifts[l];
        cell.n = n;
        cell.k = k;
        cell.trials = cfg.trials;
        cell.min_distance_sq = std::numeric_limits<double>::infinity();
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
          const SeparabilityReport& r = sep[trial * cells + o * lifts + l];
          cell.successes += r.separable ? 1 : 0;
          cell.min_distance_sq = std::min(cell.min_distance_sq, r.distance_sq);
          cell.max_gap = std::max(cell.max_gap, r.gap);
          if (r.lower_bound_sq > hull.epsilon) ++cell.certified;
          cell.not_converged += r.converged ? 0 : 1;
        }
        cell.success_rate = static_cast<double>(cell.successes) /
                            static_cast<double>(cell.trials);
        report.separability.push_back(cell);
      }
    }
    report.trials.insert(report.trials.end(),
                         std::make_move_iterator(records.begin()),
                         std::make_move_iterator(records.end()));
  }
  return report;
}

ExperimentReport RunOptimalityExperiment(const ExperimentConfig& cfg) {
  MaxN(cfg);
  ExperimentReport report;
  report.config = cfg;
  const std::vector<Seed128> seeds = TrialSeeds(cfg.primary_seed, cfg.trials);
  const ObjectiveDescriptor& obj = Objective(ObjectiveId::kR2);
  const std::size_t methods = cfg.methods.size();

  for (std::size_t n : cfg.n_values) {
    const std::size_t k = cfg.KFor(n);
    if (Binomial(n, k) > cfg.oracle_budget) {
      for (Method m : cfg.methods) {
        OptimalityCell cell;
        cell.method = m;
        cell.n = n;
        cell.k = k;
        cell.skipped = true;
        cell.notice = "C(" + std::to_string(n) + ", " + std::to_string(k) +
                      ") exceeds the oracle budget";
        report.optimality.push_back(cell);
      }
      continue;
    }

    std::vector<TrialRecord> records(cfg.trials * methods);
    ParallelFor(cfg.trials, cfg.threads, [&](std::size_t trial) {
      const Dataset data = GenerateDataset(seeds[trial], n);
      const SweepResult truth = BruteForceSelect(data, k, obj, cfg.oracle_budget);
      const double best = truth.score.value_or(0.0);
      for (std::size_t mi = 0; mi < methods; ++mi) {
        TrialRecord& rec = records[trial * methods + mi];
        rec.trial_id = trial;
        rec.seed = seeds[trial];
        rec.n = n;
        rec.k = k;
        rec.objective = ObjectiveName(obj.id);
        rec.method = MethodName(cfg.methods[mi]);
        const auto start = Clock::now();
        switch (cfg.methods[mi]) {
          case Method::kSweep: {
            const SweepResult r = NaiveQuadraticSweep(data, k, obj);
            rec.score_ratio = Ratio(r.score, best);
            break;
          }
          case Method::kAnnealing: {
            AnnealConfig anneal = cfg.anneal;
            anneal.seed = DeriveSeed(seeds[trial], 1);
            const SweepResult r = SimulatedAnnealingSelect(data, k, obj, anneal);
            rec.score_ratio = Ratio(r.score, best);
            break;
          }
          case Method::kLts: {
            const SweepResult r = LtsBruteForce(data, k, cfg.oracle_budget);
            rec.score_ratio =
                Ratio(ScoreUnchecked(obj.id, StatsFromSubset(data, r.indices)), best);
            break;
          }
          case Method::kRansac: {
            RansacConfig ransac;
            ransac.iterations = cfg.ransac_iterations;
            ransac.min_inliers = k;
            ransac.residual_threshold = cfg.ransac_threshold;
            ransac.seed = DeriveSeed(seeds[trial], 2);
            const RansacResult r = RansacLine(data, ransac);
            // A failed fit predicts no inliers and scores 0.
            std::optional<double> score;
            if (r.success && r.consensus.size() >= obj.min_subset) {
              score = ScoreUnchecked(obj.id, StatsFromSubset(data, r.consensus));
            }
            rec.score_ratio = Ratio(score, best);
            break;
          }
          case Method::kTheilSen: {
            const TheilSenResult r = TheilSen(data);
            rec.score_ratio =
                Ratio(r.success ? PredictiveR2(data, r.line) : std::nullopt, best);
            break;
          }
        }
        rec.wall_time_ns = ElapsedNs(start);
        const Method m = cfg.methods[mi];
        if (m != Method::kRansac && m != Method::kTheilSen) {
          rec.success = std::abs(*rec.score_ratio - 1.0) <= kSuccessTolerance;
        }
      }
    });

    for (std::size_t mi = 0; mi < methods; ++mi) {
      OptimalityCell cell;
      cell.method = cfg.methods[mi];
      cell.n = n;
      cell.k = k;
      cell.trials = cfg.trials;
      std::size_t successes = 0;
      bool has_success = false;
      double ratio_sum = 0.0;
      for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const TrialRecord& rec = records[trial * methods + mi];
        if (rec.success) {
          has_success = true;
          successes += *rec.success ? 1 : 0;
        }
        ratio_sum += rec.score_ratio.value_or(0.0);
      }
      if (has_success) {
        cell.successes = successes;
        cell.success_rate =
            static_cast<double>(successes) / static_cast<double>(cfg.trials);
      }
      cell.mean_ratio = ratio_sum / static_cast<double>(cfg.trials);
      report.optimality.push_back(cell);
    }
    report.trials.insert(report.trials.end(),
                         std::make_move_iterator(records.begin()),
                         std::make_move_iterator(records.end()));
  }
  return report;
}

ExperimentReport RunTimingExperiment(const ExperimentConfig& cfg) {
  MaxN(cfg);
  ExperimentReport report;
  report.config = cfg;
  const std::vector<Seed128> seeds = TrialSeeds(cfg.primary_seed, cfg.trials);
  const ObjectiveDescriptor& obj = Objective(ObjectiveId::kR2);

  for (std::size_t n : cfg.n_values) {
    const std::size_t k = cfg.KFor(n);
    NaiveQuadraticSweep(GenerateDataset(seeds[0], n), k, obj);  // warm-up

    TimingRow row;
    row.n = n;
    row.k = k;
    row.trials = cfg.trials;
    std::vector<double> ms;
    ms.reserve(cfg.trials);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
      const Dataset data = GenerateDataset(seeds[trial], n);
      const auto start = Clock::now();
      const SweepResult r = NaiveQuadraticSweep(data, k, obj);
      const std::int64_t ns = ElapsedNs(start);
      ms.push_back(static_cast<double>(ns) * 1e-6);

      TrialRecord rec;
      rec.trial_id = trial;
      rec.seed = seeds[trial];
      rec.n = n;
      rec.k = k;
      rec.objective = ObjectiveName(obj.id);
      rec.method = MethodName(Method::kSweep);
      rec.wall_time_ns = ns;
      if (n <= cfg.timing_oracle_max_n) {
        const SweepResult truth = BruteForceSelect(data, k, obj, cfg.oracle_budget);
        rec.score_ratio = Ratio(r.score, truth.score.value_or(0.0));
        rec.success = std::abs(*rec.score_ratio - 1.0) <= kSuccessTolerance;
        ++row.oracle_checked;
        row.oracle_matches += *rec.success ? 1 : 0;
      }
      report.trials.push_back(std::move(rec));
    }
    row.mean_ms = std::accumulate(ms.begin(), ms.end(), 0.0) /
                  static_cast<double>(ms.size());
    std::vector<double> sorted = ms;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    row.median_ms = sorted.size() % 2 ? sorted[mid]
                                      : 0.5 * (sorted[mid - 1] + sorted[mid]);
    row.min_ms = sorted.front();
    row.max_ms = sorted.back();
    report.timing.push_back(row);
  }
  return report;
}

ExperimentReport RunExperiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::kSeparability: return RunSeparabilityExperiment(cfg);
    case ExperimentKind::kOptimality: return RunOptimalityExperiment(cfg);
    case ExperimentKind::kTiming: return RunTimingExperiment(cfg);
  }
  throw std::invalid_argument("unknown experiment kind");
}

nlohmann::json ToJson(const TrialRecord& r) {
  nlohmann::json j;
  j["trial_id"] = r.trial_id;
  j["seed"] = r.seed.ToHex();
  j["n"] = r.n;
  j["k"] = r.k;
  j["objective"] = r.objective;
  j["method"] = r.method;
  j["success"] = r.success ? nlohmann::json(*r.success) : nlohmann::json();
  j["score_ratio"] =
      r.score_ratio ? nlohmann::json(*r.score_ratio) : nlohmann::json();
  j["wall_time_ns"] = r.wall_time_ns;
  if (r.distance_sq) j["distance_sq"] = *r.distance_sq;
  if (r.gap) j["gap"] = *r.gap;
  return j;
}

nlohmann::json ToJson(const ExperimentReport& report) {
  const ExperimentConfig& cfg = report.config;
  nlohmann::json config;
  config["experiment"] = ExperimentName(cfg.kind);
  config["n_values"] = cfg.n_values;
  config["k"] = cfg.k ? nlohmann::json(*cfg.k) : nlohmann::json("ceil(n/2)");
  config["trials"] = cfg.trials;
  config["primary_seed"] = cfg.primary_seed.ToHex();
  config["epsilon"] = cfg.hull.epsilon;
  config["hull_max_iter"] = cfg.hull.max_iter;
  config["hull_tol"] = cfg.hull.tol;
  nlohmann::json objectives = nlohmann::json::array();
  for (ObjectiveId id : cfg.objectives) objectives.push_back(ObjectiveName(id));
  config["objectives"] = objectives;
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : cfg.methods) methods.push_back(MethodName(m));
  config["methods"] = methods;
  if (cfg.kind == ExperimentKind::kSeparability) {
    nlohmann::json lifts = nlohmann::json::array();
    for (LiftId l : cfg.lifts) lifts.push_back(LiftName(l));
    config["lifts"] = lifts;
  }
  if (cfg.kind == ExperimentKind::kOptimality) {
    config["anneal"] = {{"t_max", cfg.anneal.t_max},
                        {"t_min", cfg.anneal.t_min},
                        {"steps", cfg.anneal.steps}};
    config["ransac"] = {{"iterations", cfg.ransac_iterations},
                        {"residual_threshold", cfg.ransac_threshold}};
  }

  nlohmann::json out;
  out["version"] = Version();
  out["config"] = config;
  nlohmann::json cells = nlohmann::json::array();
  for (const SeparabilityCell& c : report.separability) {
    cells.push_back({{"objective", ObjectiveName(c.objective)},
                     {"lift", LiftName(c.lift)},
                     {"n", c.n},
                     {"k", c.k},
                     {"trials", c.trials},
                     {"successes", c.successes},
                     {"success_rate", c.success_rate},
                     {"min_distance_sq", c.min_distance_sq},
                     {"max_gap", c.max_gap},
                     {"certified", c.certified},
                     {"not_converged", c.not_converged}});
  }
  for (const OptimalityCell& c : report.optimality) {
    nlohmann::json cell = {{"method", MethodName(c.method)},
                           {"n", c.n},
                           {"k", c.k},
                           {"trials", c.trials}};
    cell["successes"] = c.successes ? nlohmann::json(*c.successes) : nlohmann::json();
    cell["success_rate"] =
        c.success_rate ? nlohmann::json(*c.success_rate) : nlohmann::json();
    cell["mean_ratio"] = c.mean_ratio ? nlohmann::json(*c.mean_ratio) : nlohmann::json();
    if (c.skipped) {
      cell["skipped"] = true;
      cell["notice"] = c.notice;
    }
    cells.push_back(cell);
  }
  for (const TimingRow& r : report.timing) {
    cells.push_back({{"n", r.n},
                     {"k", r.k},
                     {"trials", r.trials},
                     {"mean_ms", r.mean_ms},
                     {"median_ms", r.median_ms},
                     {"min_ms", r.min_ms},
                     {"max_ms", r.max_ms},
                     {"oracle_checked", r.oracle_checked},
                     {"oracle_matches", r.oracle_matches}});
  }
  out["cells"] = cells;
  nlohmann::json trials = nlohmann::json::array();
  for (const TrialRecord& r : report.trials) trials.push_back(ToJson(r));
  out["trials"] = trials;
  return out;
}

std::string TimingCsv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "n,k,trials,mean_ms,median_ms,min_ms,max_ms,oracle_checked,oracle_matches\n";
  for (const TimingRow& r : report.timing) {
    out << r.n << ',' << r.k << ',' << r.trials << ',' << FormatDecimal(r.mean_ms)
        << ',' << FormatDecimal(r.median_ms) << ',' << FormatDecimal(r.min_ms)
        << ',' << FormatDecimal(r.max_ms) << ',' << r.oracle_checked << ','
        << r.oracle_matches << '\n';
  }
  return out.str();
}

double LogLogSlope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("LogLogSlope: need two or more paired values");
  }
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (sxy - sx * sy / m) / (sxx - sx * sx / m);
}

}  // namespace quadsweep
