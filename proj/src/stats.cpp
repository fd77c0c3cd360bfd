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

#include "quadsweep/stats.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quadsweep {

Dataset::Dataset(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) {
    throw std::invalid_argument("dataset: x and y lengths differ");
  }
  if (xs_.empty()) {
    throw std::invalid_argument("dataset: at least one point is required");
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
      throw std::invalid_argument("dataset: non-finite coordinate at row " +
                                  std::to_string(i + 1));
    }
  }
}

Dataset Dataset::FromPoints(std::span<const Point> points) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const Point& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return Dataset(std::move(xs), std::move(ys));
}

std::vector<Point> Dataset::Select(std::span<const std::size_t> indices) const {
  std::vector<Point> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= size()) throw std::out_of_range("dataset: index out of range");
    out.push_back(point(i));
  }
  return out;
}

void SufficientStats::Remove(double x, double y) {
  if (count == 0) {
    throw std::logic_error("SufficientStats::Remove on an empty subset");
  }
  --count;
  s_x -= x;
  s_y -= y;
  s_xx -= x * x;
  s_yy -= y * y;
  s_xy -= x * y;
}

double SufficientStats::ssd_x() const {
  return s_xx - s_x * s_x / static_cast<double>(count);
}

double SufficientStats::ssd_y() const {
  return s_yy - s_y * s_y / static_cast<double>(count);
}

double SufficientStats::sp_xy() const {
  return s_xy - s_x * s_y / static_cast<double>(count);
}

SufficientStats AddPoint(SufficientStats s, double x, double y) {
  s.Add(x, y);
  return s;
}

SufficientStats RemovePoint(SufficientStats s, double x, double y) {
  s.Remove(x, y);
  return s;
}

SufficientStats StatsFromSubset(const Dataset& data,
                                std::span<const std::size_t> indices) {
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("subset contains a repeated index");
  }
  if (!sorted.empty() && sorted.back() >= data.size()) {
    throw std::out_of_range("subset index out of range");
  }
  // Summation in ascending index order, so every caller that rescores the
  // same subset gets a bitwise-identical value.
  SufficientStats s;
  for (std::size_t i : sorted) s.Add(data.x(i), data.y(i));
  return s;
}

namespace {

constexpr std::array<ObjectiveDescriptor, 6> kObjectives = {{
    {ObjectiveId::kVar, Direction::kMinimize, LiftId::kL2, 2, true, 2,
     Frame::kStandard},
    {ObjectiveId::kTv, Direction::kMinimize, LiftId::kL4, 4, true, 2,
     Frame::kStandard},
    {ObjectiveId::kDv, Direction::kMaximize, LiftId::kL4, 4, false, 2,
     Frame::kStandard},
    {ObjectiveId::kCov, Direction::kMaximize, LiftId::kL4, 4, false, 2,
     Frame::kDiagonal},
    {ObjectiveId::kR, Direction::kMaximize, LiftId::kL5, 5, false, 3,
     Frame::kStandard},
    {ObjectiveId::kR2, Direction::kMaximize, LiftId::kL5, 5, false, 3,
     Frame::kStandard},
}};

}  // namespace

const ObjectiveDescriptor& Objective(ObjectiveId id) {
  return kObjectives[static_cast<std::size_t>(id)];
}

std::span<const ObjectiveDescriptor> AllObjectives() { return kObjectives; }

std::string_view ObjectiveName(ObjectiveId id) {
  switch (id) {
    case ObjectiveId::kVar: return "var";
    case ObjectiveId::kTv: return "tv";
    case ObjectiveId::kDv: return "dv";
    case ObjectiveId::kCov: return "cov";
    case ObjectiveId::kR: return "r";
    case ObjectiveId::kR2: return "r2";
  }
  return "?";
}

ObjectiveId ParseObjective(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const ObjectiveDescriptor& d : kObjectives) {
    if (ObjectiveName(d.id) == lower) return d.id;
  }
  throw std::invalid_argument("unknown objective '" + std::string(name) +
                              "' (expected var, tv, dv, cov, r or r2)");
}

std::optional<double> Score(const ObjectiveDescriptor& obj,
                            const SufficientStats& s) {
  if (s.count < obj.min_subset) {
    throw std::domain_error("objective '" +
                            std::string(ObjectiveName(obj.id)) + "' needs at least " +
                            std::to_string(obj.min_subset) + " points");
  }
  return ScoreUnchecked(obj.id, s);
}

std::optional<double> LeastSquaresResidual(const SufficientStats& s) {
  const double sxx = s.ssd_x();
  if (s.count < 2 || sxx <= kZeroVarianceTolerance) return std::nullopt;
  const double sxy = s.sp_xy();
  return s.ssd_y() - sxy * sxy / sxx;
}

}  // namespace quadsweep
