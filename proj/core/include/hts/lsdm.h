// Copyright 2026 The HTS Geometry Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Location/shape decoupled coordinates for Bezier line polygons.
//
// The location is an axis-aligned box (center, width, height) in normalized
// image coordinates. The shape is the 2(m+1) control points expressed
// relative to that box: a local point (u, v) maps to the global point
// (u * w + x_center, v * h + y_center), so points inside the box have local
// coordinates in [-0.5, 0.5]^2. Local coordinates are never clamped.

#ifndef HTS_LSDM_H_
#define HTS_LSDM_H_

#include <utility>
#include <vector>

#include "hts/bezier.h"
#include "hts/geometry.h"

namespace hts {

// Control points of both curves, top curve first, each left to right.
// Throws DomainError unless the count is even and at least 4.
class ControlPointSet {
 public:
  explicit ControlPointSet(std::vector<Point2> points);

  int order() const { return static_cast<int>(points_.size()) / 2 - 1; }
  const std::vector<Point2>& points() const { return points_; }
  size_t size() const { return points_.size(); }

  friend bool operator==(const ControlPointSet&,
                         const ControlPointSet&) = default;

 private:
  std::vector<Point2> points_;
};

// Box-relative control points.
struct LocalBezier : ControlPointSet {
  using ControlPointSet::ControlPointSet;
};

// Normalized image-space control points.
struct GlobalBezier : ControlPointSet {
  using ControlPointSet::ControlPointSet;
};

GlobalBezier ToGlobalBezier(const BezierLinePolygon& poly);
BezierLinePolygon ToLinePolygon(const GlobalBezier& global,
                                double confidence = 1.0);

GlobalBezier LocalToGlobal(const LocalBezier& local, const Aabb& box);

// Throws DegenerateError when box.w or box.h is not positive.
LocalBezier GlobalToLocal(const GlobalBezier& global, const Aabb& box);

// Union of the tight boxes of the top and bottom curves.
Aabb EnclosingAabb(const GlobalBezier& global);

struct LsdmTargets {
  Aabb box;
  LocalBezier local;
};

// Ground truth for the location and shape heads.
// Throws DegenerateError when the enclosing box has zero width or height.
LsdmTargets MakeLsdmTargets(const GlobalBezier& global);

}  // namespace hts

#endif  // HTS_LSDM_H_
