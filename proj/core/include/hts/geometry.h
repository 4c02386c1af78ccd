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

// Basic 2-D value types shared by every module.

#ifndef HTS_GEOMETRY_H_
#define HTS_GEOMETRY_H_

#include <array>
#include <cmath>
#include <vector>

namespace hts {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double Dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double Cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double Norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double Distance(Point2 a, Point2 b) { return Norm(a - b); }
inline Point2 Lerp(Point2 a, Point2 b, double t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}
inline bool IsFinite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Axis-aligned box in center/size form.
struct Aabb {
  double x_center = 0.0;
  double y_center = 0.0;
  double w = 0.0;
  double h = 0.0;

  static Aabb FromExtents(double min_x, double min_y, double max_x,
                          double max_y) {
    return {(min_x + max_x) / 2, (min_y + max_y) / 2, max_x - min_x,
            max_y - min_y};
  }
  double min_x() const { return x_center - w / 2; }
  double max_x() const { return x_center + w / 2; }
  double min_y() const { return y_center - h / 2; }
  double max_y() const { return y_center + h / 2; }
  double area() const { return w * h; }
  bool Contains(Point2 p, double tol = 0.0) const {
    return p.x >= min_x() - tol && p.x <= max_x() + tol &&
           p.y >= min_y() - tol && p.y <= max_y() + tol;
  }

  friend bool operator==(const Aabb&, const Aabb&) = default;
};

// Smallest box holding both inputs.
inline Aabb Union(const Aabb& a, const Aabb& b) {
  return Aabb::FromExtents(std::fmin(a.min_x(), b.min_x()),
                           std::fmin(a.min_y(), b.min_y()),
                           std::fmax(a.max_x(), b.max_x()),
                           std::fmax(a.max_y(), b.max_y()));
}

// Corner-form box (x0, y0, x1, y1), used for character and word boxes.
struct Box {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  bool IsOrdered() const { return x0 <= x1 && y0 <= y1; }
  friend bool operator==(const Box&, const Box&) = default;
};

// Quadrilateral with corners in (top-left, top-right, bottom-right,
// bottom-left) order.
using Quad = std::array<Point2, 4>;

// Open ring; the closing edge from back() to front() is implicit.
using Polygon = std::vector<Point2>;

}  // namespace hts

#endif  // HTS_GEOMETRY_H_
