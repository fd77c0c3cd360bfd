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

#include "quadsweep/sweep.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quadsweep/lifting.hpp"
#include "quadsweep/oracle.hpp"
#include "quadsweep/parallel.hpp"

namespace quadsweep {

bool LexicographicallyLess(std::span<const std::size_t> a,
                           std::span<const std::size_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

struct Best {
  bool has = false;
  std::optional<double> score;
  std::vector<std::size_t> indices;
  std::optional<Hyperplane> plane;
};

// Total order used everywhere a winner is chosen: objective first, then the
// lexicographically smaller index set.
bool Replaces(Direction dir, const Best& best, std::optional<double> score,
              std::span<const std::size_t> indices) {
  if (!best.has) return true;
  switch (Compare(dir, score, best.score)) {
    case Preference::kFirst: return true;
    case Preference::kSecond: return false;
    case Preference::kEqual: return LexicographicallyLess(indices, best.indices);
  }
  return false;
}

void Merge(Direction dir, Best& into, Best&& other) {
  if (other.has && Replaces(dir, into, other.score, other.indices)) {
    into = std::move(other);
  }
}

class TupleScanner {
 public:
  TupleScanner(const Dataset& data, std::size_t k, const ObjectiveDescriptor& obj,
               const std::vector<double>& lifted)
      : data_(data), k_(k), obj_(obj), d_(obj.dim), n_(data.size()),
        lifted_(lifted), in_tuple_(n_, 0) {
    const std::size_t m = n_ - d_;
    complement_.reserve(m);
    proj_.resize(m);
    asc_.resize(m);
    desc_.resize(m);
    pre_asc_.resize(m + 1);
    pre_desc_.resize(m + 1);
    scratch_.reserve(k_);
  }

  // Every tuple whose smallest index is `first`.
  void ScanFirst(std::size_t first) {
    std::array<std::size_t, kMaxLiftDim> t{};
    t[0] = first;
    const int rest = d_ - 1;
    for (int i = 0; i < rest; ++i) t[i + 1] = first + 1 + i;
    if (rest > 0 && t[rest] >= n_) return;
    while (true) {
      ScanTuple(t);
      if (rest == 0) return;
      // Next lexicographic combination of t[1..rest] over (first, n).
      int i = rest;
      while (i >= 1 && t[i] == n_ - static_cast<std::size_t>(rest - i + 1)) --i;
      if (i < 1) return;
      ++t[i];
      for (int j = i + 1; j <= rest; ++j) t[j] = t[j - 1] + 1;
    }
  }

  Best best;
  std::uint64_t tuples = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t candidates = 0;

 private:
  void ScanTuple(const std::array<std::size_t, kMaxLiftDim>& t) {
    ++tuples;
    std::array<double, kMaxLiftDim * kMaxLiftDim> rows{};
    for (int r = 0; r < d_; ++r) {
      for (int c = 0; c < d_; ++c) rows[r * d_ + c] = lifted_[t[r] * d_ + c];
    }
    const std::optional<Hyperplane> plane = HyperplaneThroughRows(
        std::span<const double>(rows.data(), d_ * d_), d_);
    if (!plane) {
      ++degenerate;
      return;
    }

    for (int r = 0; r < d_; ++r) in_tuple_[t[r]] = 1;
    complement_.clear();
    for (std::size_t i = 0; i < n_; ++i) {
      if (!in_tuple_[i]) complement_.push_back(i);
    }
    for (int r = 0; r < d_; ++r) in_tuple_[t[r]] = 0;
    const std::size_t m = complement_.size();

    for (std::size_t j = 0; j < m; ++j) {
      const double* p = &lifted_[complement_[j] * d_];
      double acc = 0.0;
      for (int c = 0; c < d_; ++c) acc += plane->w[c] * p[c];
      proj_[j] = acc;
    }
    // Positions in complement_ follow source order, so comparing positions
    // breaks projection ties by ascending source index.
    std::iota(asc_.begin(), asc_.end(), std::size_t{0});
    std::sort(asc_.begin(), asc_.end(), [&](std::size_t a, std::size_t b) {
      return proj_[a] < proj_[b] || (proj_[a] == proj_[b] && a < b);
    });
    // Descending projection, ties still ascending by index.
    for (std::size_t hi = m; hi > 0;) {
      std::size_t lo = hi - 1;
      while (lo > 0 && proj_[asc_[lo - 1]] == proj_[asc_[hi - 1]]) --lo;
      std::copy(asc_.begin() + lo, asc_.begin() + hi,
                desc_.begin() + (m - hi));
      hi = lo;
    }

    const std::size_t upto = std::min(k_, m);
    pre_asc_[0] = SufficientStats{};
    pre_desc_[0] = SufficientStats{};
    for (std::size_t j = 0; j < upto; ++j) {
      pre_asc_[j + 1] = pre_asc_[j];
      pre_asc_[j + 1].Add(data_.x(complement_[asc_[j]]),
                          data_.y(complement_[asc_[j]]));
      pre_desc_[j + 1] = pre_desc_[j];
      pre_desc_[j + 1].Add(data_.x(complement_[desc_[j]]),
                           data_.y(complement_[desc_[j]]));
    }

    const unsigned masks = 1u << d_;
    std::array<SufficientStats, 1u << kMaxLiftDim> sub{};
    for (unsigned mask = 1; mask < masks; ++mask) {
      const unsigned low = mask & (~mask + 1);
      sub[mask] = sub[mask ^ low];
      const std::size_t i = t[std::countr_zero(low)];
      sub[mask].Add(data_.x(i), data_.y(i));
    }

    for (unsigned mask = 0; mask < masks; ++mask) {
      const std::size_t p = static_cast<std::size_t>(std::popcount(mask));
      if (p > k_ || k_ - p > m) continue;
      const std::size_t need = k_ - p;
      for (int orient = 0; orient < 2; ++orient) {
        SufficientStats s = sub[mask];
        s.Add(orient == 0 ? pre_asc_[need] : pre_desc_[need]);
        const std::optional<double> score = ScoreUnchecked(obj_.id, s);
        ++candidates;
        if (best.has) {
          const Preference pref = Compare(obj_.direction, score, best.score);
          if (pref == Preference::kSecond) continue;
          Materialize(t, mask, orient == 0 ? asc_ : desc_, need);
          if (pref == Preference::kEqual &&
              !LexicographicallyLess(scratch_, best.indices)) {
            continue;
          }
        } else {
          Materialize(t, mask, orient == 0 ? asc_ : desc_, need);
        }
        best.has = true;
        best.score = score;
        best.indices = scratch_;
        best.plane = plane;
      }
    }
  }

  void Materialize(const std::array<std::size_t, kMaxLiftDim>& t, unsigned mask,
                   const std::vector<std::size_t>& order, std::size_t need) {
    scratch_.clear();
    for (int r = 0; r < d_; ++r) {
      if (mask & (1u << r)) scratch_.push_back(t[r]);
    }
    for (std::size_t j = 0; j < need; ++j) {
      scratch_.push_back(complement_[order[j]]);
    }
    std::sort(scratch_.begin(), scratch_.end());
  }

  const Dataset& data_;
  std::size_t k_;
  const ObjectiveDescriptor& obj_;
  int d_;
  std::size_t n_;
  const std::vector<double>& lifted_;
  std::vector<char> in_tuple_;
  std::vector<std::size_t> complement_;
  std::vector<double> proj_;
  std::vector<std::size_t> asc_, desc_;
  std::vector<SufficientStats> pre_asc_, pre_desc_;
  std::vector<std::size_t> scratch_;
};

}  // namespace

SweepResult NaiveQuadraticSweep(const Dataset& data, std::size_t k,
                                const ObjectiveDescriptor& obj,
                                const SweepOptions& options) {
  const std::size_t n = data.size();
  const std::size_t d = static_cast<std::size_t>(obj.dim);
  if (k < obj.min_subset || k > n) {
    throw std::invalid_argument(
        "sweep: k=" + std::to_string(k) + " outside [" +
        std::to_string(obj.min_subset) + ", " + std::to_string(n) + "]");
  }
  if (n < d + 1) {
    throw std::invalid_argument("sweep: need at least d+1=" +
                                std::to_string(d + 1) + " points");
  }

  std::vector<double> lifted(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const LiftedPoint p = Lift(obj.lift, data.x(i), data.y(i), i, obj.frame);
    std::copy_n(p.coords.begin(), d, lifted.begin() + i * d);
  }

  const std::size_t firsts = n - d + 1;
  std::vector<Best> bests(firsts);
  std::vector<std::array<std::uint64_t, 3>> counts(firsts);
  ParallelFor(firsts, options.threads, [&](std::size_t first) {
    TupleScanner scanner(data, k, obj, lifted);
    scanner.ScanFirst(first);
    bests[first] = std::move(scanner.best);
    counts[first] = {scanner.tuples, scanner.degenerate, scanner.candidates};
  });

  SweepResult result;
  Best best;
  for (std::size_t f = 0; f < firsts; ++f) {
    Merge(obj.direction, best, std::move(bests[f]));
    result.tuples_examined += counts[f][0];
    result.degenerate_tuples += counts[f][1];
    result.candidates_scored += counts[f][2];
  }

  if (!best.has) {
    if (n > options.fallback_max_n) {
      throw std::runtime_error(
          "sweep: every tuple is degenerate and n exceeds the brute-force "
          "fallback limit");
    }
    SweepResult fallback = BruteForceSelect(data, k, obj);
    fallback.tuples_examined = result.tuples_examined;
    fallback.degenerate_tuples = result.degenerate_tuples;
    fallback.used_fallback = true;
    return fallback;
  }

  result.indices = std::move(best.indices);
  result.score = Score(obj, StatsFromSubset(data, result.indices));
  result.hyperplane = best.plane;
  return result;
}

SweepResult SlidingWindowVariance(std::span<const double> xs, std::size_t k) {
  const std::size_t n = xs.size();
  if (k < 2 || k > n) {
    throw std::invalid_argument("sliding window: need 2 <= k <= n");
  }
  for (double x : xs) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("sliding window: non-finite value");
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return xs[a] < xs[b] || (xs[a] == xs[b] && a < b);
  });

  SufficientStats window;
  for (std::size_t j = 0; j < k; ++j) window.Add(xs[order[j]], 0.0);
  std::size_t best_start = 0;
  double best_ssd = window.ssd_x();
  for (std::size_t start = 1; start + k <= n; ++start) {
    window.Remove(xs[order[start - 1]], 0.0);
    window.Add(xs[order[start + k - 1]], 0.0);
    const double ssd = window.ssd_x();
    if (ssd < best_ssd) {
      best_ssd = ssd;
      best_start = start;
    }
  }

  SweepResult result;
  result.indices.assign(order.begin() + best_start,
                        order.begin() + best_start + k);
  std::sort(result.indices.begin(), result.indices.end());
  SufficientStats exact;
  for (std::size_t i : result.indices) exact.Add(xs[i], 0.0);
  result.score = exact.ssd_x();
  result.candidates_scored = n - k + 1;
  return result;
}

}  // namespace quadsweep
