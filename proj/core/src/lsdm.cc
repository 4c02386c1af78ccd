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

#include "hts/lsdm.h"

#include <string>

#include "hts/errors.h"

namespace hts {

ControlPointSet::ControlPointSet(std::vector<Point2> points)
    : points_(std::move(points)) {
  if (points_.size() < 4 || points_.size() % 2 != 0) {
    throw DomainError("expected 2(m+1) control points with m >= 1, got " +
                      std::to_string(points_.size()));
  }
}

GlobalBezier ToGlobalBezier(const BezierLinePolygon& poly) {
  std::vector<Point2> pts = poly.top().control_points();
  const auto& bottom = poly.bottom().control_points();
  pts.insert(pts.end(), bottom.begin(), bottom.end());
  return GlobalBezier(std::move(pts));
}

BezierLinePolygon ToLinePolygon(const GlobalBezier& global,
                                double confidence) {
  const auto& p = global.points();
  const size_t half = p.size() / 2;
  return BezierLinePolygon(
      BezierCurve({p.begin(), p.begin() + half}),
      BezierCurve({p.begin() + half, p.end()}), confidence);
}

GlobalBezier LocalToGlobal(const LocalBezier& local, const Aabb& box) {
  std::vector<Point2> out;
  out.reserve(local.size());
  for (const Point2& q : local.points()) {
    out.push_back({q.x * box.w + box.x_center, q.y * box.h + box.y_center});
  }
  return GlobalBezier(std::move(out));
}

LocalBezier GlobalToLocal(const GlobalBezier& global, const Aabb& box) {
  if (!(box.w > 0.0) || !(box.h > 0.0)) {
    throw DegenerateError("cannot express shape in a box of size " +
                          std::to_string(box.w) + " x " +
                          std::to_string(box.h));
  }
  std::vector<Point2> out;
  out.reserve(global.size());
  for (const Point2& p : global.points()) {
    out.push_back({(p.x - box.x_center) / box.w, (p.y - box.y_center) / box.h});
  }
  return LocalBezier(std::move(out));
}

Aabb EnclosingAabb(const GlobalBezier& global) {
  const BezierLinePolygon poly = ToLinePolygon(global);
  return Union(CurveTightBbox(poly.top()), CurveTightBbox(poly.bottom()));
}

LsdmTargets MakeLsdmTargets(const GlobalBezier& global) {
  const Aabb box = EnclosingAabb(global);
  return {box, GlobalToLocal(global, box)};
}

}  // namespace hts
