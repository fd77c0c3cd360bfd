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

// quadsweep: exact k-subset selection for correlation-family objectives.
//
//   quadsweep sweep --input pts.csv --k 10 --objective r2 [--json]
//   quadsweep oracle --input pts.csv --k 10 --objective r2 [--json]
//   quadsweep separability --input pts.csv --k 10 --objective r2 --lift l5
//   quadsweep experiment --name optimality --trials 200 --seed 123 --out r.json
//   quadsweep gen --n 20 --seed 0x7b --out pts.csv

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quadsweep/experiment.hpp"
#include "quadsweep/geometry.hpp"
#include "quadsweep/io.hpp"
#include "quadsweep/lifting.hpp"
#include "quadsweep/oracle.hpp"
#include "quadsweep/parallel.hpp"
#include "quadsweep/random.hpp"
#include "quadsweep/sweep.hpp"

namespace qs = quadsweep;
using nlohmann::json;

namespace {

constexpr std::array<const char*, 6> kConicTerms = {"xx", "xy", "yy",
                                                   "x",  "y",  "c"};

std::vector<std::size_t> OneBased(const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(i + 1);
  return out;
}

struct LiftContext {
  qs::LiftId lift;
  qs::Frame frame;
};

json ResultJson(const qs::SweepResult& r, std::string_view objective,
                std::optional<LiftContext> lift, std::size_t n, std::size_t k) {
  json j;
  j["objective"] = objective;
  j["n"] = n;
  j["k"] = k;
  j["indices"] = OneBased(r.indices);
  j["score"] = r.score ? json(*r.score) : json();
  if (lift && r.hyperplane) {
    j["lift"] = qs::LiftName(lift->lift);
    j["frame"] = qs::FrameName(lift->frame);
    const auto w = r.hyperplane->normal();
    j["hyperplane"] = {{"w", std::vector<double>(w.begin(), w.end())},
                       {"b", r.hyperplane->b}};
    const auto conic =
        qs::ConicCoefficients(lift->lift, lift->frame, w, r.hyperplane->b);
    json c;
    for (std::size_t i = 0; i < conic.size(); ++i) c[kConicTerms[i]] = conic[i];
    j["conic"] = c;
  }
  j["tuples_examined"] = r.tuples_examined;
  j["degenerate_tuples"] = r.degenerate_tuples;
  j["candidates_scored"] = r.candidates_scored;
  j["used_fallback"] = r.used_fallback;
  return j;
}

void PrintResult(const qs::SweepResult& r, std::optional<LiftContext> lift) {
  std::cout << "indices:";
  for (std::size_t i : r.indices) std::cout << ' ' << i + 1;
  std::cout << "\nscore: "
            << (r.score ? qs::FormatDecimal(*r.score) : std::string("INVALID"))
            << '\n';
  if (lift && r.hyperplane) {
    const auto conic = qs::ConicCoefficients(
        lift->lift, lift->frame, r.hyperplane->normal(), r.hyperplane->b);
    std::cout << "conic:";
    for (std::size_t i = 0; i < conic.size(); ++i) {
      std::cout << ' ' << kConicTerms[i] << '=' << qs::FormatDecimal(conic[i]);
    }
    std::cout << '\n';
  }
}

std::vector<std::size_t> ParseIndexList(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size() || v == 0) {
      throw std::invalid_argument("bad 1-based index '" + item + "'");
    }
    out.push_back(v - 1);
  }
  return out;
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact k-subset selection by lifted hyperplane sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qs::Version()));

  // sweep / oracle share their options.
  struct SelectOptions {
    std::string input;
    std::size_t k = 0;
    std::string objective = "r2";
    bool json = false;
    int threads = 0;
    std::uint64_t budget = qs::kDefaultOracleBudget;
  };
  SelectOptions sweep_opt, oracle_opt;

  auto* sweep = app.add_subcommand("sweep", "Exact optimum by hyperplane sweep");
  sweep->add_option("--input", sweep_opt.input, "Points CSV (header x,y)")->required();
  sweep->add_option("--k", sweep_opt.k, "Subset size")->required();
  sweep->add_option("--objective", sweep_opt.objective, "var|tv|dv|cov|r|r2");
  sweep->add_flag("--json", sweep_opt.json, "Emit JSON");
  sweep->add_option("--threads", sweep_opt.threads,
                    "Worker threads (default QUADSWEEP_THREADS or all cores)");

  auto* oracle = app.add_subcommand("oracle", "Ground truth by brute force");
  oracle->add_option("--input", oracle_opt.input, "Points CSV (header x,y)")->required();
  oracle->add_option("--k", oracle_opt.k, "Subset size")->required();
  oracle->add_option("--objective", oracle_opt.objective, "var|tv|dv|cov|r|r2|lts");
  oracle->add_flag("--json", oracle_opt.json, "Emit JSON");
  oracle->add_option("--budget", oracle_opt.budget, "Maximum number of subsets");

  std::string sep_input, sep_objective = "r2", sep_lift = "l5", sep_inliers;
  std::string sep_frame;
  std::size_t sep_k = 0;
  double sep_epsilon = 1e-10;
  bool sep_json = false;
  auto* sep = app.add_subcommand(
      "separability", "Hull-distance separability of the optimal subset");
  sep->add_option("--input", sep_input, "Points CSV (header x,y)")->required();
  sep->add_option("--k", sep_k, "Subset size (ground truth by brute force)");
  sep->add_option("--objective", sep_objective, "var|tv|dv|cov|r|r2");
  sep->add_option("--lift", sep_lift, "l2|l4|l5");
  sep->add_option("--inliers", sep_inliers,
                  "Comma-separated 1-based inlier indices instead of --k");
  sep->add_option("--frame", sep_frame,
                  "standard|diagonal (default: the objective's own frame)");
  sep->add_option("--epsilon", sep_epsilon, "Squared-distance threshold");
  sep->add_flag("--json", sep_json, "Emit JSON");

  std::string exp_name, exp_out, exp_csv, exp_seed = "123";
  std::size_t exp_trials = 0;
  std::vector<std::size_t> exp_n;
  std::optional<std::size_t> exp_k;
  int exp_threads = 0;
  auto* experiment = app.add_subcommand("experiment", "Run a seeded experiment");
  experiment->add_option("--name", exp_name, "separability|optimality|timing")->required();
  experiment->add_option("--trials", exp_trials, "Trials per cell");
  experiment->add_option("--seed", exp_seed, "Primary seed (decimal or 0x hex)");
  experiment->add_option("--n", exp_n, "Dataset sizes")->delimiter(',');
  experiment->add_option("--k", exp_k, "Fixed subset size (default ceil(n/2))");
  experiment->add_option("--out", exp_out, "JSON report path (default stdout)");
  experiment->add_option("--csv", exp_csv, "Timing CSV path");
  experiment->add_option("--threads", exp_threads, "Worker threads");

  std::size_t gen_n = 0;
  std::string gen_seed, gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a uniform random dataset");
  gen->add_option("--n", gen_n, "Number of points")->required();
  gen->add_option("--seed", gen_seed, "128-bit seed (0x hex or decimal)")->required();
  gen->add_option("--out", gen_out, "Output CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      const qs::Dataset data = qs::ReadPointsCsvFile(sweep_opt.input);
      const qs::ObjectiveDescriptor& obj =
          qs::Objective(qs::ParseObjective(sweep_opt.objective));
      qs::SweepOptions options;
      options.threads = sweep_opt.threads;
      const qs::SweepResult r =
          qs::NaiveQuadraticSweep(data, sweep_opt.k, obj, options);
      if (sweep_opt.json) {
        std::cout << ResultJson(r, qs::ObjectiveName(obj.id),
                                LiftContext{obj.lift, obj.frame},
                                data.size(), sweep_opt.k)
                         .dump(2)
                  << '\n';
      } else {
        PrintResult(r, LiftContext{obj.lift, obj.frame});
      }
    } else if (*oracle) {
      const qs::Dataset data = qs::ReadPointsCsvFile(oracle_opt.input);
      qs::SweepResult r;
      std::string name = oracle_opt.objective;
      if (name == "lts") {
        r = qs::LtsBruteForce(data, oracle_opt.k, oracle_opt.budget);
      } else {
        const qs::ObjectiveDescriptor& obj =
            qs::Objective(qs::ParseObjective(name));
        name = qs::ObjectiveName(obj.id);
        r = qs::BruteForceSelect(data, oracle_opt.k, obj, oracle_opt.budget);
      }
      if (oracle_opt.json) {
        std::cout << ResultJson(r, name, std::nullopt, data.size(), oracle_opt.k)
                         .dump(2)
                  << '\n';
      } else {
        PrintResult(r, std::nullopt);
      }
    } else if (*sep) {
      const qs::Dataset data = qs::ReadPointsCsvFile(sep_input);
      const qs::LiftId lift = qs::ParseLift(sep_lift);
      const qs::ObjectiveDescriptor& obj =
          qs::Objective(qs::ParseObjective(sep_objective));
      const qs::Frame frame =
          sep_frame.empty() ? obj.frame : qs::ParseFrame(sep_frame);
      std::vector<std::size_t> inliers;
      if (!sep_inliers.empty()) {
        inliers = ParseIndexList(sep_inliers);
      } else {
        if (sep_k == 0) throw std::invalid_argument("give --k or --inliers");
        inliers = qs::BruteForceSelect(data, sep_k, obj).indices;
      }
      qs::HullDistanceOptions options;
      options.epsilon = sep_epsilon;
      const qs::SeparabilityReport r =
          qs::CheckSeparability(data, inliers, lift, options, frame);
      if (sep_json) {
        json j = {{"inliers", OneBased(inliers)},
                  {"lift", qs::LiftName(lift)},
                  {"frame", qs::FrameName(frame)},
                  {"separable", r.separable},
                  {"distance_sq", r.distance_sq},
                  {"gap", r.gap},
                  {"iterations", r.iterations},
                  {"converged", r.converged}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "separable: " << (r.separable ? "yes" : "no")
                  << "\ndistance_sq: " << r.distance_sq << "\ngap: " << r.gap
                  << "\niterations: " << r.iterations
                  << (r.converged ? "" : " (not converged)") << '\n';
      }
    } else if (*experiment) {
      qs::ExperimentConfig cfg =
          qs::ExperimentConfig::Defaults(qs::ParseExperiment(exp_name));
      if (exp_trials > 0) cfg.trials = exp_trials;
      if (!exp_n.empty()) cfg.n_values = exp_n;
      if (exp_k) cfg.k = exp_k;
      cfg.primary_seed = qs::Seed128::Parse(exp_seed);
      cfg.threads = exp_threads;
      const qs::ExperimentReport report = qs::RunExperiment(cfg);
      WriteText(exp_out, qs::ToJson(report).dump(2) + "\n");
      if (!exp_csv.empty()) WriteText(exp_csv, qs::TimingCsv(report));
    } else if (*gen) {
      const qs::Dataset data =
          qs::GenerateDataset(qs::Seed128::Parse(gen_seed), gen_n);
      if (gen_out.empty() || gen_out == "-") {
        qs::WritePointsCsv(std::cout, data);
      } else {
        qs::WritePointsCsvFile(gen_out, data);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "quadsweep: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
