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

#ifndef QUADSWEEP_GEOMETRY_HPP_
#define QUADSWEEP_GEOMETRY_HPP_

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "quadsweep/lifting.hpp"
#include "quadsweep/stats.hpp"

namespace quadsweep {

// Affine hyperplane w·p + b = 0 with ||w|| = 1 and the first nonzero
// component of w positive.
struct Hyperplane {
  std::array<double, kMaxLiftDim> w{};
  double b = 0.0;
  int dim = 0;

  std::span<const double> normal() const {
    return {w.data(), static_cast<std::size_t>(dim)};
  }
  double Evaluate(std::span<const double> p) const;
};

inline constexpr double kRankTolerance = 1e-10;

// Hyperplane through `dim` points given row-major in `rows` (dim * dim
// values). Computes the one-dimensional kernel of [rows | 1] by row
// reduction with partial pivoting. nullopt means the tuple is affinely
// dependent (degenerate).
std::optional<Hyperplane> HyperplaneThroughRows(std::span<const double> rows,
                                                int dim);

// Throws std::invalid_argument unless there are exactly d points of
// dimension d.
std::optional<Hyperplane> HyperplaneFromTuple(
    std::span<const LiftedPoint> points);

// Dense point set in R^dim stored row-major.
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(std::size_t dim) : dim_(dim) {}
  PointCloud(std::initializer_list<std::initializer_list<double>> rows);
  static PointCloud FromLifted(std::span<const LiftedPoint> points);

  void Append(std::span<const double> p);
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const { return data_.empty(); }
  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  PointCloud Translated(std::span<const double> shift) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

struct HullDistanceOptions {
  int max_iter = 20000;
  // Frank-Wolfe duality gap at which the solver stops.
  double tol = 1e-12;
  // Squared distance above which the two hulls count as disjoint.
  double epsilon = 1e-10;
};

struct SeparabilityReport {
  bool separable = false;
  // Squared distance between the hulls at the final iterate. Always an upper
  // bound on the true value.
  double distance_sq = 0.0;
  double gap = 0.0;
  // Squared margin of the best separating hyperplane seen; a certified lower
  // bound on the true value. Zero when no separating direction was found.
  double lower_bound_sq = 0.0;
  int iterations = 0;
  bool converged = false;
  // Nearest points of the two hulls (barycentric combinations).
  std::vector<double> point_a;
  std::vector<double> point_b;
};

// Squared Euclidean distance between conv(a) and conv(b) by away-step
// Frank-Wolfe over the pairwise differences a_i - b_j. Throws
// std::invalid_argument for empty sets, mismatched dimensions or non-finite
// coordinates.
SeparabilityReport HullDistance(const PointCloud& a, const PointCloud& b,
                                const HullDistanceOptions& options = {});

// Lifts both sets and tests whether their hulls are disjoint.
SeparabilityReport CheckSeparability(std::span<const Point> inliers,
                                     std::span<const Point> outliers,
                                     LiftId lift,
                                     const HullDistanceOptions& options = {},
                                     Frame frame = Frame::kStandard);

// Inliers are `subset`; outliers are the rest of `data`.
SeparabilityReport CheckSeparability(const Dataset& data,
                                     std::span<const std::size_t> subset,
                                     LiftId lift,
                                     const HullDistanceOptions& options = {},
                                     Frame frame = Frame::kStandard);

}  // namespace quadsweep

#endif  // QUADSWEEP_GEOMETRY_HPP_
