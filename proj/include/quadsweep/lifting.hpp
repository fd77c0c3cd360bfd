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

#ifndef QUADSWEEP_LIFTING_HPP_
#define QUADSWEEP_LIFTING_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "quadsweep/stats.hpp"

namespace quadsweep {

inline constexpr int kMaxLiftDim = 5;

// Image of a planar point under a lift map. Only the first `dim` entries of
// `coords` are meaningful.
struct LiftedPoint {
  std::array<double, kMaxLiftDim> coords{};
  int dim = 0;
  std::size_t source_index = 0;

  std::span<const double> view() const {
    return {coords.data(), static_cast<std::size_t>(dim)};
  }
};

int LiftDim(LiftId lift);
std::string_view LiftName(LiftId lift);
// Accepts "l2", "l4", "l5" (case-insensitive).
LiftId ParseLift(std::string_view name);

std::string_view FrameName(Frame frame);
// Accepts "standard" and "diagonal".
Frame ParseFrame(std::string_view name);

// Coordinate orders:
//   L2: (x², x)             y is ignored
//   L4: (x², y², x, y)
//   L5: (x², xy, y², x, y)
// Under Frame::kDiagonal, (x, y) is first replaced by (x + y, x - y).
// Throws std::invalid_argument on non-finite input.
LiftedPoint Lift(LiftId lift, double x, double y, std::size_t source_index = 0,
                 Frame frame = Frame::kStandard);

std::vector<LiftedPoint> LiftDataset(LiftId lift, const Dataset& data,
                                     Frame frame = Frame::kStandard);
std::vector<LiftedPoint> LiftPoints(LiftId lift, std::span<const Point> points,
                                    Frame frame = Frame::kStandard);

// Rewrites the hyperplane w·L(x, y) + b = 0 as a plane conic
//   a_xx x² + a_xy xy + a_yy y² + a_x x + a_y y + c = 0
// and returns {a_xx, a_xy, a_yy, a_x, a_y, c}.
std::array<double, 6> ConicCoefficients(LiftId lift, Frame frame,
                                        std::span<const double> w, double b);

}  // namespace quadsweep

#endif  // QUADSWEEP_LIFTING_HPP_
