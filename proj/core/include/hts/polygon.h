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

// Planar polygon utilities: areas, containment, simplicity, hulls, and the
// boolean operations behind IoU and union masks.

#ifndef HTS_POLYGON_H_
#define HTS_POLYGON_H_

#include <span>
#include <vector>

#include "hts/geometry.h"

namespace hts {

// Shoelace area; positive for the boundary orientation produced by
// PolygonBoundary (y down, top edge first, left to right).
double SignedArea(std::span<const Point2> ring);
double Area(std::span<const Point2> ring);

// Even-odd rule. Points on the boundary count as inside.
bool PointInPolygon(std::span<const Point2> ring, Point2 p);

bool SegmentsIntersect(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

// True when no two non-adjacent edges touch and no adjacent edges overlap.
bool IsSimple(std::span<const Point2> ring);

Aabb BoundsOf(std::span<const Point2> ring);

// Andrew's monotone chain, positive orientation, collinear points dropped.
Polygon ConvexHull(std::span<const Point2> points);

// Minimum-area enclosing rectangle by rotating calipers over the hull edges.
Quad MinAreaRect(std::span<const Point2> points);

// A polygon with holes. Rings are open and positively oriented for outers,
// negatively for holes.
struct Region {
  Polygon outer;
  std::vector<Polygon> holes;
};

// Possibly disjoint union of regions.
using RegionSet = std::vector<Region>;

double Area(const RegionSet& set);
Aabb BoundsOf(const RegionSet& set);

struct CleanedPolygon {
  RegionSet region;
  // Input crossed itself and was resolved with the even-odd rule.
  bool was_self_intersecting = false;
};

// Turns an arbitrary ring into a valid region set.
CleanedPolygon CleanPolygon(std::span<const Point2> ring);

// Exact boolean union. Falls back to RasterUnionOf when the exact result is
// invalid or its area falls outside [max part area, sum of part areas].
RegionSet UnionOf(std::span<const Polygon> polygons);

inline constexpr double kRasterUnionCellsPerUnit = 4.0;

// Union by scanline rasterization on a grid of 1 / cells_per_unit cells,
// returned as the union of the covered cell rectangles. A cell is covered
// when its center is inside some input (even-odd per input).
RegionSet RasterUnionOf(std::span<const Polygon> polygons,
                        double cells_per_unit = kRasterUnionCellsPerUnit);
RegionSet Intersection(const RegionSet& a, const RegionSet& b);
double IntersectionArea(const RegionSet& a, const RegionSet& b);

// area(a ∩ b) / area(a ∪ b), 0 when the union is empty.
double RegionIou(const RegionSet& a, const RegionSet& b);

}  // namespace hts

#endif  // HTS_POLYGON_H_
