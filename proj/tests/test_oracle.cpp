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

#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "quadsweep/oracle.hpp"
#include "test_util.hpp"

using namespace quadsweep;
using quadsweep::testing::AllSubsets;
using quadsweep::testing::Seeded;
using quadsweep::testing::TwoPassR2;

TEST_CASE("oracle on a unique collinear triple") {
  const Dataset d({0, 1, 2, 5}, {0, 1, 2, 0});
  const SweepResult r = BruteForceSelect(d, 3, Objective(ObjectiveId::kR2));
  CHECK(r.indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(*r.score == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("oracle with k equal to n") {
  const Dataset d = Seeded(51, 0, 7);
  const ObjectiveDescriptor& r2 = Objective(ObjectiveId::kR2);
  const SweepResult r = BruteForceSelect(d, 7, r2);
  CHECK(r.indices.size() == 7);
  const std::vector<std::size_t> all = {0, 1, 2, 3, 4, 5, 6};
  CHECK(*r.score == *Score(r2, StatsFromSubset(d, all)));
}

TEST_CASE("oracle agrees with a from-scratch exhaustive pass") {
  const Dataset d = Seeded(52, 0, 15);
  const SweepResult r = BruteForceSelect(d, 8, Objective(ObjectiveId::kR2));
  double best = -1;
  std::vector<std::size_t> arg;
  for (const auto& s : AllSubsets(15, 8)) {
    std::vector<double> xs, ys;
    for (std::size_t i : s) {
      xs.push_back(d.x(i));
      ys.push_back(d.y(i));
    }
    const double v = TwoPassR2(xs, ys);
    if (v > best) {
      best = v;
      arg = s;
    }
  }
  CHECK(r.indices == arg);
  CHECK(*r.score == doctest::Approx(best).epsilon(1e-9));
}

TEST_CASE("oracle budget and arguments") {
  const Dataset d = Seeded(53, 0, 20);
  CHECK_THROWS_AS(BruteForceSelect(d, 10, Objective(ObjectiveId::kR2), 1000),
                  BudgetExceeded);
  CHECK_THROWS_AS(BruteForceSelect(d, 2, Objective(ObjectiveId::kR2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(BruteForceSelect(d, 21, Objective(ObjectiveId::kVar)),
                  std::invalid_argument);
  CHECK_THROWS_AS(LtsBruteForce(d, 2), std::invalid_argument);
}

TEST_CASE("LTS prefers an exactly collinear subset") {
  const Dataset d({0, 1, 2, 3, 0.5, 2.5}, {1, 3, 5, 7, 4, 0});
  const SweepResult r = LtsBruteForce(d, 4);
  CHECK(r.indices == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(std::abs(*r.score) <= 1e-12);
}

TEST_CASE("LTS agrees with per-subset line fits") {
  const Dataset d = Seeded(54, 0, 10);
  const SweepResult r = LtsBruteForce(d, 5);
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> arg;
  for (const auto& s : AllSubsets(10, 5)) {
    double mx = 0, my = 0;
    for (std::size_t i : s) {
      mx += d.x(i);
      my += d.y(i);
    }
    mx /= 5;
    my /= 5;
    double sxx = 0, sxy = 0;
    for (std::size_t i : s) {
      sxx += (d.x(i) - mx) * (d.x(i) - mx);
      sxy += (d.x(i) - mx) * (d.y(i) - my);
    }
    const double slope = sxy / sxx;
    const double icept = my - slope * mx;
    double sse = 0;
    for (std::size_t i : s) {
      const double e = d.y(i) - slope * d.x(i) - icept;
      sse += e * e;
    }
    if (sse < best) {
      best = sse;
      arg = s;
    }
  }
  CHECK(r.indices == arg);
  CHECK(*r.score == doctest::Approx(best).epsilon(1e-9));
}

TEST_CASE("LTS and R2 winners differ on some instances") {
  int differ = 0;
  for (std::size_t t = 0; t < 20; ++t) {
    const Dataset d = Seeded(55, t, 12);
    if (LtsBruteForce(d, 6).indices !=
        BruteForceSelect(d, 6, Objective(ObjectiveId::kR2)).indices) {
      ++differ;
    }
  }
  CHECK(differ > 0);
}
