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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "quadsweep/combinations.hpp"
#include "quadsweep/oracle.hpp"
#include "quadsweep/sweep.hpp"
#include "test_util.hpp"

using namespace quadsweep;
using quadsweep::testing::AllSubsets;
using quadsweep::testing::Seeded;

namespace {

const ObjectiveId kAll[] = {ObjectiveId::kVar, ObjectiveId::kTv, ObjectiveId::kDv,
                            ObjectiveId::kCov, ObjectiveId::kR,  ObjectiveId::kR2};

}  // namespace

TEST_CASE("sweep finds a planted collinear triple") {
  const Dataset d({0.9, 0, 0.35, 1, 0.6, 2}, {0.1, 0, 0.8, 1, 0.45, 2});
  const SweepResult r = NaiveQuadraticSweep(d, 3, Objective(ObjectiveId::kR2));
  CHECK(r.indices == std::vector<std::size_t>{1, 3, 5});
  CHECK(*r.score == doctest::Approx(1.0).epsilon(1e-12));
  // Unique: every other triple scores strictly lower.
  for (const auto& s : AllSubsets(6, 3)) {
    if (s == r.indices) continue;
    CHECK(*Score(Objective(ObjectiveId::kR2), StatsFromSubset(d, s)) < 1.0 - 1e-6);
  }
}

TEST_CASE("sweep result is self-consistent and matches the oracle") {
  for (ObjectiveId id : kAll) {
    const ObjectiveDescriptor& obj = Objective(id);
    for (std::size_t t = 0; t < 15; ++t) {
      const Dataset d = Seeded(41, t, 12);
      const SweepResult r = NaiveQuadraticSweep(d, 6, obj);
      REQUIRE(r.indices.size() == 6);
      CHECK(std::is_sorted(r.indices.begin(), r.indices.end()));
      CHECK(std::abs(*r.score - *Score(obj, StatsFromSubset(d, r.indices))) <= 1e-12);
      const SweepResult o = BruteForceSelect(d, 6, obj);
      CHECK(*r.score == *o.score);
      CHECK(r.indices == o.indices);
      CHECK(r.tuples_examined == Binomial(12, obj.dim));
      CHECK_FALSE(r.used_fallback);
      REQUIRE(r.hyperplane.has_value());
      CHECK(r.hyperplane->dim == obj.dim);
    }
  }
}

TEST_CASE("sweep is independent of the thread count") {
  const Dataset d = Seeded(42, 0, 16);
  SweepOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const auto a = NaiveQuadraticSweep(d, 8, Objective(ObjectiveId::kR2), one);
  const auto b = NaiveQuadraticSweep(d, 8, Objective(ObjectiveId::kR2), many);
  CHECK(a.indices == b.indices);
  CHECK(*a.score == *b.score);
  CHECK(a.candidates_scored == b.candidates_scored);
}

TEST_CASE("sweep edge cases") {
  const Dataset d = Seeded(43, 0, 8);
  const ObjectiveDescriptor& r2 = Objective(ObjectiveId::kR2);
  const SweepResult all = NaiveQuadraticSweep(d, 8, r2);
  CHECK(all.indices.size() == 8);
  CHECK(*all.score == *Score(r2, StatsFromSubset(d, all.indices)));
  CHECK_THROWS_AS(NaiveQuadraticSweep(d, 2, r2), std::invalid_argument);
  CHECK_THROWS_AS(NaiveQuadraticSweep(d, 9, r2), std::invalid_argument);
  CHECK_THROWS_AS(NaiveQuadraticSweep(Seeded(43, 1, 5), 3, r2), std::invalid_argument);
}

TEST_CASE("all-degenerate input falls back to brute force") {
  // Every point on one line: all L5 tuples are affinely dependent.
  std::vector<double> xs, ys;
  for (int i = 0; i < 8; ++i) {
    xs.push_back(i);
    ys.push_back(2.0 * i + 1);
  }
  const Dataset d(xs, ys);
  const SweepResult r = NaiveQuadraticSweep(d, 4, Objective(ObjectiveId::kR2));
  CHECK(r.used_fallback);
  CHECK(r.degenerate_tuples == r.tuples_examined);
  CHECK(*r.score == doctest::Approx(1.0));
  CHECK(r.indices == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("sliding window variance") {
  const std::vector<double> xs = {0, 1, 2, 10};
  const SweepResult r = SlidingWindowVariance(xs, 3);
  CHECK(r.indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(*r.score == doctest::Approx(2.0));

  const SweepResult whole = SlidingWindowVariance(xs, 4);
  CHECK(whole.indices == std::vector<std::size_t>{0, 1, 2, 3});

  CHECK_THROWS_AS(SlidingWindowVariance(xs, 1), std::invalid_argument);
  CHECK_THROWS_AS(SlidingWindowVariance(xs, 5), std::invalid_argument);

  const ObjectiveDescriptor& var = Objective(ObjectiveId::kVar);
  for (std::size_t t = 0; t < 30; ++t) {
    const Dataset d = Seeded(44, t, 14);
    const SweepResult s = SlidingWindowVariance(d.xs(), 5);
    const SweepResult o = BruteForceSelect(d, 5, var);
    CHECK(s.indices == o.indices);
    CHECK(*s.score == *o.score);
  }
}

TEST_CASE("lexicographic order") {
  const std::vector<std::size_t> a = {0, 2, 5}, b = {0, 3, 4}, c = {0, 2, 5};
  CHECK(LexicographicallyLess(a, b));
  CHECK_FALSE(LexicographicallyLess(b, a));
  CHECK_FALSE(LexicographicallyLess(a, c));
}
