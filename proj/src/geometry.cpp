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

#include "quadsweep/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace quadsweep {

double Hyperplane::Evaluate(std::span<const double> p) const {
  double acc = b;
  for (int i = 0; i < dim; ++i) acc += w[i] * p[i];
  return acc;
}

std::optional<Hyperplane> HyperplaneThroughRows(std::span<const double> rows,
                                                int dim) {
  if (dim < 1 || dim > kMaxLiftDim ||
      rows.size() != static_cast<std::size_t>(dim * dim)) {
    throw std::invalid_argument("hyperplane: expected dim x dim coordinates");
  }
  const int cols = dim + 1;
  std::array<std::array<double, kMaxLiftDim + 1>, kMaxLiftDim> m{};
  double scale = 1.0;  // the ones column
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      m[r][c] = rows[r * dim + c];
      scale = std::max(scale, std::abs(m[r][c]));
    }
    m[r][dim] = 1.0;
  }
  const double tol = kRankTolerance * scale;

  // Reduced row echelon form.
  std::array<int, kMaxLiftDim> pivot_col{};
  int rank = 0;
  int free_col = -1;
  for (int c = 0; c < cols; ++c) {
    if (rank == dim) {
      if (free_col < 0) free_col = c;
      break;
    }
    int best = rank;
    for (int r = rank + 1; r < dim; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[best][c])) best = r;
    }
    if (std::abs(m[best][c]) <= tol) {
      if (free_col >= 0) return std::nullopt;  // nullity >= 2
      free_col = c;
      continue;
    }
    std::swap(m[best], m[rank]);
    const double inv = 1.0 / m[rank][c];
    for (int k = c; k < cols; ++k) m[rank][k] *= inv;
    for (int r = 0; r < dim; ++r) {
      if (r == rank || m[r][c] == 0.0) continue;
      const double f = m[r][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col[rank] = c;
    ++rank;
  }
  if (rank < dim || free_col < 0) return std::nullopt;

  std::array<double, kMaxLiftDim + 1> kernel{};
  kernel[free_col] = 1.0;
  for (int r = 0; r < rank; ++r) kernel[pivot_col[r]] = -m[r][free_col];

  double norm = 0.0;
  for (int i = 0; i < dim; ++i) norm += kernel[i] * kernel[i];
  norm = std::sqrt(norm);
  if (!(norm > std::numeric_limits<double>::min())) return std::nullopt;

  Hyperplane h;
  h.dim = dim;
  double sign = 1.0;
  for (int i = 0; i < dim; ++i) {
    if (std::abs(kernel[i]) / norm > 1e-12) {
      sign = kernel[i] > 0 ? 1.0 : -1.0;
      break;
    }
  }
  for (int i = 0; i < dim; ++i) h.w[i] = sign * kernel[i] / norm;
  h.b = sign * kernel[dim] / norm;

  for (int r = 0; r < dim; ++r) {
    std::span<const double> p = rows.subspan(r * dim, dim);
    double p_norm = 0.0;
    for (double v : p) p_norm += v * v;
    if (std::abs(h.Evaluate(p)) > 1e-9 * std::max(1.0, std::sqrt(p_norm))) {
      return std::nullopt;
    }
  }
  return h;
}

std::optional<Hyperplane> HyperplaneFromTuple(
    std::span<const LiftedPoint> points) {
  const int dim = points.empty() ? 0 : points.front().dim;
  if (dim == 0 || points.size() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument(
        "hyperplane: need exactly d lifted points of dimension d");
  }
  std::array<double, kMaxLiftDim * kMaxLiftDim> rows{};
  for (int r = 0; r < dim; ++r) {
    if (points[r].dim != dim) {
      throw std::invalid_argument("hyperplane: mixed point dimensions");
    }
    for (int c = 0; c < dim; ++c) rows[r * dim + c] = points[r].coords[c];
  }
  return HyperplaneThroughRows(std::span<const double>(rows.data(), dim * dim),
                               dim);
}

PointCloud::PointCloud(std::initializer_list<std::initializer_list<double>> rows) {
  for (const auto& row : rows) {
    Append(std::span<const double>(row.begin(), row.size()));
  }
}

PointCloud PointCloud::FromLifted(std::span<const LiftedPoint> points) {
  PointCloud cloud(points.empty() ? 0 : points.front().dim);
  for (const LiftedPoint& p : points) cloud.Append(p.view());
  return cloud;
}

void PointCloud::Append(std::span<const double> p) {
  if (dim_ == 0 && data_.empty()) dim_ = p.size();
  if (p.size() != dim_ || dim_ == 0) {
    throw std::invalid_argument("point cloud: dimension mismatch");
  }
  data_.insert(data_.end(), p.begin(), p.end());
}

PointCloud PointCloud::Translated(std::span<const double> shift) const {
  if (shift.size() != dim_) {
    throw std::invalid_argument("point cloud: shift dimension mismatch");
  }
  PointCloud out(dim_);
  out.data_ = data_;
  for (std::size_t i = 0; i < out.data_.size(); ++i) {
    out.data_[i] += shift[i % dim_];
  }
  return out;
}

namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Active-set state over atoms (i, j) representing a_i - b_j.
class PairSimplexSolver {
 public:
  PairSimplexSolver(const PointCloud& a, const PointCloud& b)
      : a_(a), b_(b), dim_(a.dim()), na_(a.size()), nb_(b.size()),
        weight_(na_ * nb_, 0.0), in_active_(na_ * nb_, 0), z_(dim_),
        za_(na_), zb_(nb_) {}

  SeparabilityReport Run(const HullDistanceOptions& opt) {
    // Start from the closest pair of vertices.
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < na_; ++i) {
      for (std::size_t j = 0; j < nb_; ++j) {
        double d2 = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) {
          const double t = a_[i][c] - b_[j][c];
          d2 += t * t;
        }
        if (d2 < best_d) {
          best_d = d2;
          best = i * nb_ + j;
        }
      }
    }
    Activate(best);
    weight_[best] = 1.0;
    RecomputeIterate();

    SeparabilityReport report;
    double gap = std::numeric_limits<double>::infinity();
    int it = 0;
    std::vector<double> dir(dim_);
    for (; it < opt.max_iter; ++it) {
      for (std::size_t i = 0; i < na_; ++i) za_[i] = Dot(a_[i], z_);
      for (std::size_t j = 0; j < nb_; ++j) zb_[j] = Dot(b_[j], z_);
      const std::size_t is = std::min_element(za_.begin(), za_.end()) - za_.begin();
      const std::size_t js = std::max_element(zb_.begin(), zb_.end()) - zb_.begin();
      const double zz = Dot(z_, z_);
      const double zs = za_[is] - zb_[js];
      gap = std::max(0.0, 2.0 * (zz - zs));
      if (zs > 0.0 && zz > 0.0) {
        report.lower_bound_sq = std::max(report.lower_bound_sq, zs * zs / zz);
      }
      if (gap < opt.tol) break;

      std::size_t away = active_.front();
      double away_val = -std::numeric_limits<double>::infinity();
      for (std::size_t atom : active_) {
        const double v = za_[atom / nb_] - zb_[atom % nb_];
        if (v > away_val) {
          away_val = v;
          away = atom;
        }
      }
      const double fw_gain = zz - zs;
      const double away_gain = away_val - zz;
      const bool fw_step = fw_gain >= away_gain || active_.size() == 1;

      double gamma_max;
      if (fw_step) {
        for (std::size_t c = 0; c < dim_; ++c) {
          dir[c] = a_[is][c] - b_[js][c] - z_[c];
        }
        gamma_max = 1.0;
      } else {
        const std::size_t ia = away / nb_, ja = away % nb_;
        for (std::size_t c = 0; c < dim_; ++c) {
          dir[c] = z_[c] - (a_[ia][c] - b_[ja][c]);
        }
        const double wa = weight_[away];
        gamma_max = wa / (1.0 - wa);
      }
      const double dd = Dot(dir, dir);
      if (!(dd > 0.0)) break;
      const double gamma = std::clamp(-Dot(z_, dir) / dd, 0.0, gamma_max);

      if (fw_step) {
        for (std::size_t atom : active_) weight_[atom] *= (1.0 - gamma);
        const std::size_t s = is * nb_ + js;
        Activate(s);
        weight_[s] += gamma;
        if (gamma == 1.0) {
          for (std::size_t atom : active_) {
            if (atom != s) weight_[atom] = 0.0;
          }
        }
      } else {
        for (std::size_t atom : active_) weight_[atom] *= (1.0 + gamma);
        weight_[away] -= gamma;
        if (gamma == gamma_max) weight_[away] = 0.0;
      }
      Prune();
      if ((it + 1) % 64 == 0) {
        RecomputeIterate();
      } else {
        for (std::size_t c = 0; c < dim_; ++c) z_[c] += gamma * dir[c];
      }
    }

    RecomputeIterate();
    report.distance_sq = Dot(z_, z_);
    report.gap = gap;
    report.iterations = it;
    report.converged = gap < opt.tol;
    report.separable = report.distance_sq > opt.epsilon;
    report.point_a.assign(dim_, 0.0);
    report.point_b.assign(dim_, 0.0);
    for (std::size_t atom : active_) {
      const double w = weight_[atom];
      for (std::size_t c = 0; c < dim_; ++c) {
        report.point_a[c] += w * a_[atom / nb_][c];
        report.point_b[c] += w * b_[atom % nb_][c];
      }
    }
    return report;
  }

 private:
  void Activate(std::size_t atom) {
    if (!in_active_[atom]) {
      in_active_[atom] = 1;
      active_.push_back(atom);
    }
  }

  void Prune() {
    double total = 0.0;
    auto keep = std::remove_if(active_.begin(), active_.end(),
                               [&](std::size_t atom) {
                                 if (weight_[atom] <= 0.0) {
                                   weight_[atom] = 0.0;
                                   in_active_[atom] = 0;
                                   return true;
                                 }
                                 return false;
                               });
    active_.erase(keep, active_.end());
    for (std::size_t atom : active_) total += weight_[atom];
    for (std::size_t atom : active_) weight_[atom] /= total;
  }

  void RecomputeIterate() {
    std::fill(z_.begin(), z_.end(), 0.0);
    for (std::size_t atom : active_) {
      const double w = weight_[atom];
      std::span<const double> ai = a_[atom / nb_];
      std::span<const double> bj = b_[atom % nb_];
      for (std::size_t c = 0; c < dim_; ++c) z_[c] += w * (ai[c] - bj[c]);
    }
  }

  const PointCloud& a_;
  const PointCloud& b_;
  std::size_t dim_, na_, nb_;
  std::vector<double> weight_;
  std::vector<char> in_active_;
  std::vector<std::size_t> active_;
  std::vector<double> z_;
  std::vector<double> za_, zb_;
};

void ValidateCloud(const PointCloud& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (double v : c[i]) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("hull distance: non-finite coordinate");
      }
    }
  }
}

}  // namespace

SeparabilityReport HullDistance(const PointCloud& a, const PointCloud& b,
                                const HullDistanceOptions& options) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("hull distance: both sets must be nonempty");
  }
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("hull distance: dimension mismatch");
  }
  ValidateCloud(a);
  ValidateCloud(b);
  return PairSimplexSolver(a, b).Run(options);
}

SeparabilityReport CheckSeparability(std::span<const Point> inliers,
                                     std::span<const Point> outliers,
                                     LiftId lift,
                                     const HullDistanceOptions& options,
                                     Frame frame) {
  if (inliers.empty() || outliers.empty()) {
    throw std::invalid_argument("separability: both sets must be nonempty");
  }
  const PointCloud a = PointCloud::FromLifted(LiftPoints(lift, inliers, frame));
  const PointCloud b = PointCloud::FromLifted(LiftPoints(lift, outliers, frame));
  return HullDistance(a, b, options);
}

SeparabilityReport CheckSeparability(const Dataset& data,
                                     std::span<const std::size_t> subset,
                                     LiftId lift,
                                     const HullDistanceOptions& options,
                                     Frame frame) {
  std::vector<char> chosen(data.size(), 0);
  for (std::size_t i : subset) {
    if (i >= data.size()) throw std::out_of_range("separability: bad index");
    chosen[i] = 1;
  }
  std::vector<Point> in, out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    (chosen[i] ? in : out).push_back(data.point(i));
  }
  return CheckSeparability(in, out, lift, options, frame);
}

}  // namespace quadsweep
