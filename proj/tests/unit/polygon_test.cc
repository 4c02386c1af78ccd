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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hts/polygon.h"
#include "oracles.h"

namespace hts {
namespace {

Polygon Rect(double x0, double y0, double x1, double y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

TEST(PolygonTest, AreaAndOrientation) {
  const Polygon sq = Rect(0, 0, 2, 3);
  EXPECT_DOUBLE_EQ(SignedArea(sq), 6.0);
  Polygon rev(sq.rbegin(), sq.rend());
  EXPECT_DOUBLE_EQ(SignedArea(rev), -6.0);
  EXPECT_DOUBLE_EQ(Area(rev), 6.0);
}

TEST(PolygonTest, PointInPolygonAgreesWithCrossingOracle) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    const Polygon p = oracle::RandomStarPolygon(rng, {0, 0}, 0.3, 1.0, 9);
    for (int i = 0; i < 200; ++i) {
      const Point2 q{oracle::Uniform(rng, -1.1, 1.1), oracle::Uniform(rng, -1.1, 1.1)};
      EXPECT_EQ(PointInPolygon(p, q), oracle::InsideEvenOdd(p, q));
    }
  }
}

TEST(PolygonTest, SimplicityDetectsBowtie) {
  EXPECT_TRUE(IsSimple(Rect(0, 0, 1, 1)));
  EXPECT_FALSE(IsSimple(Polygon{{0, 0}, {1, 1}, {1, 0}, {0, 1}}));
  EXPECT_TRUE(SegmentsIntersect({0, 0}, {1, 1}, {0, 1}, {1, 0}));
  EXPECT_FALSE(SegmentsIntersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
}

TEST(PolygonTest, ConvexHullContainsAllPoints) {
  std::mt19937_64 rng(2);
  std::vector<Point2> pts;
  for (int i = 0; i < 200; ++i) {
    pts.push_back({oracle::Uniform(rng, -3, 3), oracle::Uniform(rng, -1, 1)});
  }
  const Polygon hull = ConvexHull(pts);
  EXPECT_TRUE(IsSimple(hull));
  for (Point2 p : pts) {
    // Points on the hull boundary are allowed; check by area of the hull
    // with the point added.
    std::vector<Point2> with = hull;
    with.push_back(p);
    EXPECT_NEAR(Area(ConvexHull(with)), Area(hull), 1e-9);
  }
}

TEST(PolygonTest, MinAreaRectOfRotatedRectangleIsItself) {
  const double c = std::cos(0.4), s = std::sin(0.4);
  std::vector<Point2> pts;
  for (Point2 p : Rect(-2, -1, 2, 1)) pts.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
  const Quad q = MinAreaRect(pts);
  EXPECT_NEAR(Area(Polygon(q.begin(), q.end())), 8.0, 1e-9);
}

TEST(PolygonTest, IouOfShiftedSquares) {
  const RegionSet a = CleanPolygon(Rect(0, 0, 1, 1)).region;
  const RegionSet b = CleanPolygon(Rect(0.5, 0, 1.5, 1)).region;
  EXPECT_NEAR(RegionIou(a, b), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(IntersectionArea(a, b), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(RegionIou(a, a), 1.0);
  EXPECT_DOUBLE_EQ(RegionIou(a, CleanPolygon(Rect(5, 5, 6, 6)).region), 0.0);
}

TEST(PolygonTest, CleanPolygonResolvesBowtieEvenOdd) {
  const CleanedPolygon c = CleanPolygon(Polygon{{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  EXPECT_TRUE(c.was_self_intersecting);
  EXPECT_NEAR(Area(c.region), 2.0, 1e-12);
  EXPECT_EQ(c.region.size(), 2u);
  EXPECT_FALSE(CleanPolygon(Rect(0, 0, 1, 1)).was_self_intersecting);
}

TEST(PolygonTest, CleanPolygonOfSelfOverlappingRingMatchesRaster) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    Polygon ring;
    for (int i = 0; i < 7; ++i) ring.push_back({oracle::Uniform(rng, 0, 1), oracle::Uniform(rng, 0, 1)});
    const double raster = oracle::RasterUnionArea({ring}, 1024);
    EXPECT_NEAR(Area(CleanPolygon(ring).region), raster, 1e-3) << k;
  }
}

TEST(PolygonTest, IouOfCleanedRingsMatchesRaster) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 50; ++k) {
    Polygon a, b;
    for (int i = 0; i < 6; ++i) a.push_back({oracle::Uniform(rng, 0, 1), oracle::Uniform(rng, 0, 1)});
    for (int i = 0; i < 6; ++i) b.push_back({oracle::Uniform(rng, 0, 1), oracle::Uniform(rng, 0, 1)});
    const double iou = RegionIou(CleanPolygon(a).region, CleanPolygon(b).region);
    EXPECT_NEAR(iou, oracle::RasterizePair(a, b).IoU(), 2e-3) << k;
  }
}

TEST(PolygonTest, CleanPolygonKeepsHoleOfInnerLoop) {
  // Outer square traversed, then an inner square entered through a crossing:
  // the inner loop has winding 2 and is a hole under even-odd.
  const Polygon ring{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {0, 1}, {3, 1}, {3, 3}, {1, 3}, {1, -1}};
  const CleanedPolygon c = CleanPolygon(ring);
  EXPECT_TRUE(c.was_self_intersecting);
  EXPECT_NEAR(Area(c.region), oracle::RasterUnionArea({ring}, 2048), 2e-2);
}

TEST(PolygonTest, UnionOfOverlappingRectangles) {
  const std::vector<Polygon> parts{Rect(0, 0, 2, 1), Rect(1, 0, 3, 1), Rect(10, 0, 11, 1)};
  const RegionSet u = UnionOf(parts);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_NEAR(Area(u), 4.0, 1e-12);
}

TEST(PolygonTest, UnionMatchesRasterOracle) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    std::vector<Polygon> parts;
    for (int i = 0; i < 5; ++i) {
      parts.push_back(oracle::RandomStarPolygon(
          rng, {oracle::Uniform(rng, 0, 3), oracle::Uniform(rng, 0, 3)}, 0.2, 1.0, 7));
    }
    EXPECT_NEAR(Area(UnionOf(parts)), oracle::RasterUnionArea(parts, 1024), 2e-2) << k;
  }
}

TEST(PolygonTest, RasterUnionIsExactOnGridAlignedRectangles) {
  const std::vector<Polygon> parts{Rect(0, 0, 2, 1), Rect(1, 0.5, 3, 2)};
  const RegionSet exact = UnionOf(parts);
  const RegionSet raster = RasterUnionOf(parts);
  EXPECT_NEAR(Area(raster), Area(exact), 1e-12);
  EXPECT_NEAR(RegionIou(raster, exact), 1.0, 1e-12);
}

TEST(PolygonTest, RasterUnionApproximatesCurvedShapes) {
  std::mt19937_64 rng(5);
  std::vector<Polygon> parts;
  for (int i = 0; i < 4; ++i) {
    parts.push_back(oracle::RandomStarPolygon(rng, {i * 5.0, 0}, 4.0, 8.0, 11));
  }
  const double exact = Area(UnionOf(parts));
  const double raster = Area(RasterUnionOf(parts));
  EXPECT_NEAR(raster / exact, 1.0, 0.02);
}

TEST(PolygonTest, EmptyUnionHasZeroArea) {
  EXPECT_TRUE(UnionOf(std::vector<Polygon>{}).empty());
  EXPECT_DOUBLE_EQ(RegionIou({}, {}), 0.0);
}

}  // namespace
}  // namespace hts
