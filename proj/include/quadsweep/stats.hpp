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

#ifndef QUADSWEEP_STATS_HPP_
#define QUADSWEEP_STATS_HPP_

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace quadsweep {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A paired sample (X, Y). Indices are 0-based throughout the library; the
// CLI converts to 1-based on output.
class Dataset {
 public:
  Dataset() = default;
  // Throws std::invalid_argument on length mismatch, empty input or
  // non-finite entries.
  Dataset(std::vector<double> xs, std::vector<double> ys);

  static Dataset FromPoints(std::span<const Point> points);

  std::size_t size() const { return xs_.size(); }
  bool empty() const { return xs_.empty(); }
  double x(std::size_t i) const { return xs_[i]; }
  double y(std::size_t i) const { return ys_[i]; }
  Point point(std::size_t i) const { return {xs_[i], ys_[i]}; }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }

  // Points at the given indices, in the given order. Throws std::out_of_range.
  std::vector<Point> Select(std::span<const std::size_t> indices) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// Running power sums over a selected subset. Add/Remove are O(1).
struct SufficientStats {
  std::size_t count = 0;
  double s_x = 0.0;
  double s_y = 0.0;
  double s_xx = 0.0;
  double s_yy = 0.0;
  double s_xy = 0.0;

  void Add(double x, double y) {
    ++count;
    s_x += x;
    s_y += y;
    s_xx += x * x;
    s_yy += y * y;
    s_xy += x * y;
  }

  // Throws std::logic_error when count == 0.
  void Remove(double x, double y);

  void Add(const SufficientStats& other) {
    count += other.count;
    s_x += other.s_x;
    s_y += other.s_y;
    s_xx += other.s_xx;
    s_yy += other.s_yy;
    s_xy += other.s_xy;
  }

  // Sums of squared deviations and co-deviations.
  double ssd_x() const;
  double ssd_y() const;
  double sp_xy() const;

  friend bool operator==(const SufficientStats&,
                         const SufficientStats&) = default;
};

SufficientStats AddPoint(SufficientStats s, double x, double y);
SufficientStats RemovePoint(SufficientStats s, double x, double y);

// Throws std::out_of_range for an index >= n and std::invalid_argument for
// repeated indices.
SufficientStats StatsFromSubset(const Dataset& data,
                                std::span<const std::size_t> indices);

enum class ObjectiveId { kVar, kTv, kDv, kCov, kR, kR2 };
enum class Direction { kMinimize, kMaximize };
enum class LiftId { kL2, kL4, kL5 };
// Coordinates fed to the lift. kDiagonal uses (x + y, x - y), which turns the
// rectangular hyperbolas of the covariance problem into axis-aligned ones.
enum class Frame { kStandard, kDiagonal };

struct ObjectiveDescriptor {
  ObjectiveId id;
  Direction direction;
  LiftId lift;
  int dim;
  // Sort orientation of projected complements: ascending for minimized
  // objectives. The sweep evaluates both orientations regardless.
  bool ascending;
  std::size_t min_subset;
  Frame frame = Frame::kStandard;
};

const ObjectiveDescriptor& Objective(ObjectiveId id);
std::span<const ObjectiveDescriptor> AllObjectives();

std::string_view ObjectiveName(ObjectiveId id);
// Accepts "var", "tv", "dv", "cov", "r", "r2" (case-insensitive). Throws
// std::invalid_argument otherwise.
ObjectiveId ParseObjective(std::string_view name);

// Deviation sums at or below this make r and R² undefined.
inline constexpr double kZeroVarianceTolerance = 1e-12;

// nullopt is the INVALID score. Throws std::domain_error when s.count is
// below the objective's minimum subset size.
std::optional<double> Score(const ObjectiveDescriptor& obj,
                            const SufficientStats& s);

// Same as Score without the precondition check; for hot loops that already
// guarantee count >= min_subset.
inline std::optional<double> ScoreUnchecked(ObjectiveId id,
                                            const SufficientStats& s) {
  const double k = static_cast<double>(s.count);
  const double sxx = s.s_xx - s.s_x * s.s_x / k;
  switch (id) {
    case ObjectiveId::kVar:
      return sxx;
    case ObjectiveId::kTv:
      return sxx + (s.s_yy - s.s_y * s.s_y / k);
    case ObjectiveId::kDv:
      return sxx - (s.s_yy - s.s_y * s.s_y / k);
    case ObjectiveId::kCov:
      return s.s_xy - s.s_x * s.s_y / k;
    case ObjectiveId::kR:
    case ObjectiveId::kR2: {
      const double syy = s.s_yy - s.s_y * s.s_y / k;
      if (sxx <= kZeroVarianceTolerance || syy <= kZeroVarianceTolerance) {
        return std::nullopt;
      }
      const double sxy = s.s_xy - s.s_x * s.s_y / k;
      if (id == ObjectiveId::kR) return sxy / (std::sqrt(sxx) * std::sqrt(syy));
      return (sxy * sxy) / (sxx * syy);
    }
  }
  return std::nullopt;
}

// Residual sum of squares of the least-squares line through the subset;
// nullopt when the x deviation sum vanishes.
std::optional<double> LeastSquaresResidual(const SufficientStats& s);

enum class Preference { kFirst, kSecond, kEqual };

// INVALID loses to every valid score; two INVALIDs are equal.
inline Preference Compare(Direction direction, std::optional<double> a,
                          std::optional<double> b) {
  if (!a && !b) return Preference::kEqual;
  if (!b) return Preference::kFirst;
  if (!a) return Preference::kSecond;
  if (*a == *b) return Preference::kEqual;
  const bool a_wins = direction == Direction::kMaximize ? *a > *b : *a < *b;
  return a_wins ? Preference::kFirst : Preference::kSecond;
}

inline bool Better(Direction direction, std::optional<double> a,
                   std::optional<double> b) {
  return Compare(direction, a, b) == Preference::kFirst;
}

}  // namespace quadsweep

#endif  // QUADSWEEP_STATS_HPP_
