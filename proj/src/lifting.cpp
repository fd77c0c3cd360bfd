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

#include "quadsweep/lifting.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quadsweep {

int LiftDim(LiftId lift) {
  switch (lift) {
    case LiftId::kL2: return 2;
    case LiftId::kL4: return 4;
    case LiftId::kL5: return 5;
  }
  return 0;
}

std::string_view LiftName(LiftId lift) {
  switch (lift) {
    case LiftId::kL2: return "L2";
    case LiftId::kL4: return "L4";
    case LiftId::kL5: return "L5";
  }
  return "?";
}

LiftId ParseLift(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "l2") return LiftId::kL2;
  if (lower == "l4") return LiftId::kL4;
  if (lower == "l5") return LiftId::kL5;
  throw std::invalid_argument("unknown lift '" + std::string(name) +
                              "' (expected l2, l4 or l5)");
}

std::string_view FrameName(Frame frame) {
  return frame == Frame::kDiagonal ? "diagonal" : "standard";
}

Frame ParseFrame(std::string_view name) {
  if (name == "standard") return Frame::kStandard;
  if (name == "diagonal") return Frame::kDiagonal;
  throw std::invalid_argument("unknown frame '" + std::string(name) +
                              "' (expected standard or diagonal)");
}

LiftedPoint Lift(LiftId lift, double x, double y, std::size_t source_index,
                 Frame frame) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("lift: non-finite coordinate");
  }
  if (frame == Frame::kDiagonal) {
    const double u = x + y;
    const double v = x - y;
    x = u;
    y = v;
  }
  LiftedPoint p;
  p.source_index = source_index;
  p.dim = LiftDim(lift);
  switch (lift) {
    case LiftId::kL2:
      p.coords = {x * x, x, 0.0, 0.0, 0.0};
      break;
    case LiftId::kL4:
      p.coords = {x * x, y * y, x, y, 0.0};
      break;
    case LiftId::kL5:
      p.coords = {x * x, x * y, y * y, x, y};
      break;
  }
  return p;
}

std::vector<LiftedPoint> LiftDataset(LiftId lift, const Dataset& data,
                                     Frame frame) {
  std::vector<LiftedPoint> out;
  out.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out.push_back(Lift(lift, data.x(i), data.y(i), i, frame));
  }
  return out;
}

std::vector<LiftedPoint> LiftPoints(LiftId lift, std::span<const Point> points,
                                    Frame frame) {
  std::vector<LiftedPoint> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.push_back(Lift(lift, points[i].x, points[i].y, i, frame));
  }
  return out;
}

std::array<double, 6> ConicCoefficients(LiftId lift, Frame frame,
                                        std::span<const double> w, double b) {
  if (static_cast<int>(w.size()) != LiftDim(lift)) {
    throw std::invalid_argument("conic: weight length does not match lift");
  }
  // Coefficients in the lifted frame's own (u, v) coordinates.
  double uu = 0, uv = 0, vv = 0, u = 0, v = 0;
  switch (lift) {
    case LiftId::kL2: uu = w[0]; u = w[1]; break;
    case LiftId::kL4: uu = w[0]; vv = w[1]; u = w[2]; v = w[3]; break;
    case LiftId::kL5: uu = w[0]; uv = w[1]; vv = w[2]; u = w[3]; v = w[4]; break;
  }
  if (frame == Frame::kStandard) return {uu, uv, vv, u, v, b};
  // u = x + y, v = x - y.
  return {uu + uv + vv, 2 * uu - 2 * vv, uu - uv + vv, u + v, u - v, b};
}

}  // namespace quadsweep
