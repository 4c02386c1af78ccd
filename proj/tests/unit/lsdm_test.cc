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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hts/errors.h"
#include "hts/lsdm.h"
#include "oracles.h"

namespace hts {
namespace {

GlobalBezier RandomGlobal(std::mt19937_64& rng) {
  std::vector<Point2> pts;
  const double y0 = oracle::Uniform(rng, 0.1, 0.8);
  const double h = oracle::Uniform(rng, 0.02, 0.1);
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < 4; ++i) {
      pts.push_back({0.1 + 0.25 * i + oracle::Uniform(rng, -0.05, 0.05),
                     y0 + side * h + oracle::Uniform(rng, -0.05, 0.05)});
    }
  }
  return GlobalBezier(pts);
}

double MaxDiff(const ControlPointSet& a, const ControlPointSet& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    m = std::max({m, std::abs(a.points()[i].x - b.points()[i].x),
                  std::abs(a.points()[i].y - b.points()[i].y)});
  }
  return m;
}

TEST(ControlPointSetTest, RejectsOddOrTooFew) {
  EXPECT_THROW(LocalBezier({{0, 0}, {1, 1}}), DomainError);
  EXPECT_THROW(LocalBezier({{0, 0}, {1, 1}, {2, 2}}), DomainError);
  EXPECT_EQ(LocalBezier({{0, 0}, {1, 1}, {2, 2}, {3, 3}}).order(), 1);
}

TEST(LocalToGlobalTest, Examples) {
  const std::vector<Point2> pad = {{0, 0}, {0, 0}, {0, 0}};
  auto first = [&](Point2 p, Aabb box) {
    std::vector<Point2> pts = {p};
    pts.insert(pts.end(), pad.begin(), pad.end());
    return LocalToGlobal(LocalBezier(pts), box).points()[0];
  };
  Point2 g = first({0, 0}, {0.3, 0.7, 0.2, 0.1});
  EXPECT_DOUBLE_EQ(g.x, 0.3);
  EXPECT_DOUBLE_EQ(g.y, 0.7);
  g = first({0.5, -0.5}, {0.4, 0.6, 0.2, 0.1});
  EXPECT_DOUBLE_EQ(g.x, 0.5);
  EXPECT_DOUBLE_EQ(g.y, 0.55);
  const Point2 p{0.123, -0.456};
  g = first(p, {0.5, 0.5, 1, 1});
  EXPECT_DOUBLE_EQ(g.x, p.x + 0.5);
  EXPECT_DOUBLE_EQ(g.y, p.y + 0.5);
}

TEST(LocalToGlobalTest, LinearInBoxParameters) {
  std::mt19937_64 rng(11);
  const LocalBezier local = GlobalToLocal(RandomGlobal(rng), {0.5, 0.5, 0.8, 0.4});
  const Aabb a{0.2, 0.3, 0.1, 0.2};
  const Aabb b{0.4, 0.1, 0.3, 0.05};
  const Aabb sum{a.x_center + b.x_center, a.y_center + b.y_center, a.w + b.w, a.h + b.h};
  const GlobalBezier ga = LocalToGlobal(local, a);
  const GlobalBezier gb = LocalToGlobal(local, b);
  const GlobalBezier gs = LocalToGlobal(local, sum);
  for (size_t i = 0; i < local.size(); ++i) {
    EXPECT_NEAR(gs.points()[i].x, ga.points()[i].x + gb.points()[i].x, 1e-15);
    EXPECT_NEAR(gs.points()[i].y, ga.points()[i].y + gb.points()[i].y, 1e-15);
  }
}

TEST(GlobalToLocalTest, RoundTripIsIdentity) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 1000; ++k) {
    const GlobalBezier g = RandomGlobal(rng);
    const Aabb box{oracle::Uniform(rng, 0, 1), oracle::Uniform(rng, 0, 1),
                   oracle::Uniform(rng, 0.01, 1), oracle::Uniform(rng, 0.01, 1)};
    EXPECT_LE(MaxDiff(LocalToGlobal(GlobalToLocal(g, box), box), g), 1e-12);
  }
}

TEST(GlobalToLocalTest, RectangleCornersAreHalfUnits) {
  const GlobalBezier g({{0.2, 0.3}, {0.6, 0.3}, {0.2, 0.5}, {0.6, 0.5}});
  const LocalBezier l = GlobalToLocal(g, Aabb::FromExtents(0.2, 0.3, 0.6, 0.5));
  const Point2 expect[] = {{-0.5, -0.5}, {0.5, -0.5}, {-0.5, 0.5}, {0.5, 0.5}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(l.points()[i].x, expect[i].x, 1e-15);
    EXPECT_NEAR(l.points()[i].y, expect[i].y, 1e-15);
  }
}

TEST(GlobalToLocalTest, DegenerateBoxThrows) {
  const GlobalBezier g({{0.2, 0.3}, {0.6, 0.3}, {0.2, 0.5}, {0.6, 0.5}});
  EXPECT_THROW(GlobalToLocal(g, {0.5, 0.5, 0.0, 0.1}), DegenerateError);
  EXPECT_THROW(GlobalToLocal(g, {0.5, 0.5, 0.1, 0.0}), DegenerateError);
}

TEST(EnclosingAabbTest, Examples) {
  const GlobalBezier rect({{0.1, 0.2}, {0.3, 0.2}, {0.5, 0.2}, {0.7, 0.2},
                           {0.1, 0.4}, {0.3, 0.4}, {0.5, 0.4}, {0.7, 0.4}});
  const Aabb r = EnclosingAabb(rect);
  EXPECT_NEAR(r.min_x(), 0.1, 1e-15);
  EXPECT_NEAR(r.max_x(), 0.7, 1e-15);
  EXPECT_NEAR(r.min_y(), 0.2, 1e-15);
  EXPECT_NEAR(r.max_y(), 0.4, 1e-15);

  const GlobalBezier arch({{0, 0}, {0, 1}, {1, 1}, {1, 0},
                           {0, 0}, {1.0 / 3, 0}, {2.0 / 3, 0}, {1, 0}});
  const Aabb a = EnclosingAabb(arch);
  EXPECT_NEAR(a.min_y(), 0.0, 1e-15);
  EXPECT_NEAR(a.max_y(), 0.75, 1e-15);
  const std::vector<Point2> top(arch.points().begin(), arch.points().begin() + 4);
  EXPECT_NEAR(a.max_y(), oracle::DenseSampleBounds(top, 10000).max_y(), 1e-6);

  const GlobalBezier point(std::vector<Point2>(8, Point2{0.4, 0.6}));
  const Aabb p = EnclosingAabb(point);
  EXPECT_EQ(p.w, 0);
  EXPECT_EQ(p.h, 0);
  EXPECT_EQ(p.x_center, 0.4);
  EXPECT_EQ(p.y_center, 0.6);
}

TEST(EnclosingAabbTest, ContainsDenseBoundarySamples) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    const GlobalBezier g = RandomGlobal(rng);
    const Aabb box = EnclosingAabb(g);
    const std::vector<Point2> top(g.points().begin(), g.points().begin() + 4);
    const std::vector<Point2> bottom(g.points().begin() + 4, g.points().end());
    for (const auto* c : {&top, &bottom}) {
      for (int i = 0; i <= 2000; ++i) {
        EXPECT_TRUE(box.Contains(oracle::DeCasteljau(*c, i / 2000.0), 1e-12));
      }
    }
  }
}

TEST(MakeLsdmTargetsTest, ReconstructsGlobal) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 1000; ++k) {
    const GlobalBezier g = RandomGlobal(rng);
    const LsdmTargets t = MakeLsdmTargets(g);
    EXPECT_LE(MaxDiff(LocalToGlobal(t.local, t.box), g), 1e-9);
  }
}

TEST(MakeLsdmTargetsTest, RectangleLocalsAreHalfUnits) {
  const GlobalBezier rect({{0.1, 0.2}, {0.3, 0.2}, {0.5, 0.2}, {0.7, 0.2},
                           {0.1, 0.4}, {0.3, 0.4}, {0.5, 0.4}, {0.7, 0.4}});
  const LsdmTargets t = MakeLsdmTargets(rect);
  for (const Point2& p : t.local.points()) EXPECT_NEAR(std::abs(p.y), 0.5, 1e-12);
  EXPECT_NEAR(t.local.points()[0].x, -0.5, 1e-12);
  EXPECT_NEAR(t.local.points()[3].x, 0.5, 1e-12);
}

TEST(MakeLsdmTargetsTest, ExtremesTouchHalfUnits) {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 200; ++k) {
    const GlobalBezier g = RandomGlobal(rng);
    const LsdmTargets t = MakeLsdmTargets(g);
    // Dense samples of the local curves span [-0.5, 0.5] on each axis.
    const std::vector<Point2> top(t.local.points().begin(), t.local.points().begin() + 4);
    const std::vector<Point2> bottom(t.local.points().begin() + 4, t.local.points().end());
    const Aabb bt = oracle::DenseSampleBounds(top, 10000);
    const Aabb bb = oracle::DenseSampleBounds(bottom, 10000);
    const Aabb all = Union(bt, bb);
    EXPECT_NEAR(all.min_x(), -0.5, 1e-6);
    EXPECT_NEAR(all.max_x(), 0.5, 1e-6);
    EXPECT_NEAR(all.min_y(), -0.5, 1e-6);
    EXPECT_NEAR(all.max_y(), 0.5, 1e-6);
  }
}

TEST(MakeLsdmTargetsTest, ShapeIsInvariantToTranslationAndScale) {
  std::mt19937_64 rng(16);
  for (int k = 0; k < 1000; ++k) {
    const GlobalBezier g = RandomGlobal(rng);
    const double s = oracle::Uniform(rng, 0.2, 5);
    const double sy = oracle::Uniform(rng, 0.2, 5);
    const Point2 d{oracle::Uniform(rng, -1, 1), oracle::Uniform(rng, -1, 1)};
    std::vector<Point2> iso, axis;
    for (const Point2& p : g.points()) {
      iso.push_back({s * p.x + d.x, s * p.y + d.y});
      axis.push_back({s * p.x + d.x, sy * p.y + d.y});
    }
    const LocalBezier base = MakeLsdmTargets(g).local;
    EXPECT_LE(MaxDiff(MakeLsdmTargets(GlobalBezier(iso)).local, base), 1e-9);
    EXPECT_LE(MaxDiff(MakeLsdmTargets(GlobalBezier(axis)).local, base), 1e-9);
  }
}

TEST(MakeLsdmTargetsTest, DegenerateEnclosingBoxThrows) {
  const GlobalBezier flat({{0.1, 0.2}, {0.5, 0.2}, {0.1, 0.2}, {0.5, 0.2}});
  EXPECT_THROW(MakeLsdmTargets(flat), DegenerateError);
}

TEST(LineConversionTest, GlobalAndPolygonRoundTrip) {
  std::mt19937_64 rng(17);
  const GlobalBezier g = RandomGlobal(rng);
  const BezierLinePolygon poly = ToLinePolygon(g, 0.7);
  EXPECT_EQ(poly.confidence(), 0.7);
  EXPECT_EQ(poly.top().control_points()[0], g.points()[0]);
  EXPECT_EQ(poly.bottom().control_points()[0], g.points()[4]);
  EXPECT_EQ(ToGlobalBezier(poly), g);
}

}  // namespace
}  // namespace hts
