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

#include "hts/bezier.h"
#include "hts/document.h"
#include "hts/errors.h"
#include "hts/fixture.h"
#include "hts/polygon.h"
#include "hts/rectify.h"
#include "oracles.h"

namespace hts {
namespace {

constexpr ImageSize kImage{1000, 500};

// Straight line polygon between pixel corners (x0, y0) and (x1, y1).
BezierLinePolygon RectLine(double x0, double y0, double x1, double y1, ImageSize size = kImage) {
  auto curve = [&](double y) {
    std::vector<Point2> pts;
    for (int i = 0; i <= 3; ++i) {
      pts.push_back({(x0 + (x1 - x0) * i / 3.0) / size.width, y / size.height});
    }
    return BezierCurve(pts);
  };
  return BezierLinePolygon(curve(y0), curve(y1));
}

void ExpectPointNear(Point2 a, Point2 b, double tol) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
}

TEST(CropWidthTest, Examples) {
  const BezierLinePolygon line = RectLine(100, 200, 500, 240);
  EXPECT_EQ(ComputeCropWidth(line, kImage, 40), 400);
  EXPECT_EQ(ComputeCropWidth(line, kImage, 20), 200);
  const ImageSize huge{1000000, 10};
  EXPECT_EQ(ComputeCropWidth(RectLine(0, 0, 1000000, 10, huge), huge, 40, 1024), 1024);
  EXPECT_THROW(ComputeCropWidth(RectLine(0, 5, 100, 5), kImage, 40), DegenerateError);
  EXPECT_THROW(ComputeCropWidth(line, kImage, 0), DomainError);
}

TEST(CropMappingTest, RectangleExamples) {
  const BezierLinePolygon line = RectLine(100, 200, 500, 240);
  const CropMapping m(line, 400, 40, kImage);
  ExpectPointNear(CropToImage(m, {200, 20}), {300, 220}, 1e-9);
  ExpectPointNear(CropToImage(m, {0, 0}), {100, 200}, 1e-9);
  ExpectPointNear(ImageToCrop(m, {300, 220}), {200, 20}, 1e-9);
  EXPECT_THROW(CropToImage(m, {401, 0}), DomainError);
  EXPECT_THROW(CropToImage(m, {0, -1}), DomainError);
  EXPECT_THROW(ImageToCrop(m, {900, 50}), NoPreimageError);
  EXPECT_THROW(CropMapping(line, 0, 40, kImage), DomainError);
}

TEST(CropMappingTest, CornersMapToCurveEndpoints) {
  const Fixture f = GenerateFixture({.seed = 21});
  for (size_t i = 0; i < f.perfect.lines.size(); ++i) {
    const BezierLinePolygon& line = f.perfect.lines[i];
    const CropMapping m = MappingFor(line, f.perfect.image_size, f.perfect.recognitions[i]);
    const double w = m.crop_width(), h = m.crop_height();
    const ImageSize s = f.perfect.image_size;
    auto scaled = [&](Point2 p) { return Point2{p.x * s.width, p.y * s.height}; };
    ExpectPointNear(CropToImage(m, {0, 0}), scaled(line.top().front()), 1e-9);
    ExpectPointNear(CropToImage(m, {w, 0}), scaled(line.top().back()), 1e-9);
    ExpectPointNear(CropToImage(m, {w, h}), scaled(line.bottom().back()), 1e-9);
    ExpectPointNear(CropToImage(m, {0, h}), scaled(line.bottom().front()), 1e-9);
  }
}

TEST(CropMappingTest, GridPointsLieInsideBoundary) {
  const Fixture f = GenerateFixture({.seed = 22, .curvature = 0.5});
  for (size_t i = 0; i < f.perfect.lines.size(); ++i) {
    const CropMapping m = MappingFor(f.perfect.lines[i], f.perfect.image_size, f.perfect.recognitions[i]);
    const BoundaryPolygon b = PolygonBoundary(f.perfect.lines[i], 64);
    Polygon px;
    for (Point2 p : b.points) px.push_back({p.x * m.image_size().width, p.y * m.image_size().height});
    for (int a = 1; a <= 9; ++a) {
      for (int c = 1; c <= 3; ++c) {
        const Point2 q = CropToImage(m, {m.crop_width() * a / 10.0, m.crop_height() * c / 4.0});
        EXPECT_TRUE(oracle::InsideEvenOdd(px, q));
      }
    }
  }
}

TEST(CropMappingTest, RoundTripOnCurvedFixtures) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Fixture f = GenerateFixture({.seed = 100 + seed, .curvature = 0.5});
    for (size_t i = 0; i < f.perfect.lines.size(); ++i) {
      const CropMapping m = MappingFor(f.perfect.lines[i], f.perfect.image_size, f.perfect.recognitions[i]);
      for (int k = 0; k < 20; ++k) {
        const Point2 p{oracle::Uniform(rng, 0.01, 0.99) * m.crop_width(),
                       oracle::Uniform(rng, 0.01, 0.99) * m.crop_height()};
        const Point2 q = CropToImage(m, p);
        const Point2 back = ImageToCrop(m, q);
        EXPECT_LE(Distance(CropToImage(m, back), q), kInverseTolerancePx);
        EXPECT_LE(Distance(back, p), kInverseTolerancePx);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(CropMappingTest, XOrderFollowsMidlineArcLength) {
  const Fixture f = GenerateFixture({.seed = 24, .curvature = 0.5});
  const CropMapping m = MappingFor(f.perfect.lines[0], f.perfect.image_size, f.perfect.recognitions[0]);
  const double v = m.crop_height() / 2.0;
  double prev_len = -1;
  Point2 prev = CropToImage(m, {0, v});
  double len = 0;
  for (int u = 1; u <= m.crop_width(); ++u) {
    const Point2 q = CropToImage(m, {static_cast<double>(u), v});
    len += Distance(q, prev);
    EXPECT_GT(len, prev_len);
    prev_len = len;
    prev = q;
  }
}

TEST(CropRectifyTest, ConstantImageGivesConstantCrop) {
  const GrayImage img(200, 100, 0.625f);
  const RectifiedCrop c = CropRectify(img, RectLine(20, 20, 180, 60, {200, 100}), 16);
  for (float v : c.image.pixels()) EXPECT_FLOAT_EQ(v, 0.625f);
  EXPECT_EQ(c.image.height(), 16);
  EXPECT_EQ(c.image.width(), c.mapping.crop_width());
}

TEST(CropRectifyTest, AxisAlignedRectangleIsIdentity) {
  std::mt19937_64 rng(25);
  GrayImage img(120, 80);
  for (int y = 0; y < 80; ++y) {
    for (int x = 0; x < 120; ++x) img.at(x, y) = static_cast<float>(rng() % 256) / 255.0f;
  }
  const RectifiedCrop c = CropRectify(img, RectLine(17, 23, 97, 43, img.size()), 20);
  ASSERT_EQ(c.image.width(), 80);
  for (int v = 0; v < 20; ++v) {
    for (int u = 0; u < 80; ++u) EXPECT_NEAR(c.image.at(u, v), img.at(17 + u, 23 + v), 1.0 / 255);
  }
}

TEST(CropRectifyTest, OutsideImageReadsBlack) {
  const GrayImage img(100, 100, 1.0f);
  const RectifiedCrop c = CropRectify(img, RectLine(-50, 10, 50, 30, img.size()), 20);
  EXPECT_EQ(c.image.at(0, 10), 0.0f);
  EXPECT_EQ(c.image.at(c.image.width() - 1, 10), 1.0f);
  EXPECT_THROW(CropRectify(GrayImage(), RectLine(0, 0, 10, 10, {10, 10}), 10), DomainError);
}

// Renders the line's glyph boxes along its curve and along a straight line
// with the same crop size, rectifies both, and compares the crops.
TEST(CropRectifyTest, CurvedWordMatchesStraightReference) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const Fixture f = GenerateFixture({.seed = 300 + seed, .curvature = 0.5});
    const ImageSize size = f.perfect.image_size;
    for (size_t i = 0; i < f.perfect.lines.size(); ++i) {
      const RecognitionRecord& rec = f.perfect.recognitions[i];
      const BezierLinePolygon& curved = f.perfect.lines[i];
      const CropMapping cm = MappingFor(curved, size, rec);
      const double h = rec.crop_height;
      // Native scale: one crop pixel per image pixel of line height.
      const Point2 a = EvalBezier(curved.top(), 0.5);
      const Point2 b = EvalBezier(curved.bottom(), 0.5);
      const double k = std::hypot((a.x - b.x) * size.width, (a.y - b.y) * size.height) / h;
      const ImageSize flat_size{static_cast<int>(cm.crop_width() * k) + 40,
                                static_cast<int>(h * k) + 40};
      const BezierLinePolygon flat =
          RectLine(20, 20, 20 + cm.crop_width() * k, 20 + h * k, flat_size);
      const CropMapping fm(flat, cm.crop_width(), cm.crop_height(), flat_size);
      std::vector<Quad> curved_quads, flat_quads;
      for (const CharResult& ch : rec.chars) {
        if (ch.symbol == U' ') continue;
        const Box box{ch.box.x0 * h, ch.box.y0 * h, ch.box.x1 * h, ch.box.y1 * h};
        curved_quads.push_back(ProjectBox(cm, box));
        flat_quads.push_back(ProjectBox(fm, box));
      }
      const GrayImage curved_img = oracle::RenderQuads(size.width, size.height, curved_quads, 0.1f);
      const GrayImage flat_img =
          oracle::RenderQuads(flat_size.width, flat_size.height, flat_quads, 0.1f);
      const RectifiedCrop c1 = CropRectify(curved_img, curved, cm.crop_height());
      const RectifiedCrop c2 = CropRectify(flat_img, flat, cm.crop_height());
      ASSERT_EQ(c1.image.size(), c2.image.size());
      double err = 0;
      for (size_t p = 0; p < c1.image.pixels().size(); ++p) {
        err += std::abs(c1.image.pixels()[p] - c2.image.pixels()[p]);
      }
      EXPECT_LE(err / c1.image.pixels().size(), 0.05) << seed << " " << i;
    }
  }
}

TEST(ProjectBoxTest, RectangleAndFullCrop) {
  const BezierLinePolygon line = RectLine(100, 200, 500, 240);
  const CropMapping m(line, 400, 40, kImage);
  const Quad q = ProjectBox(m, {10, 5, 30, 35});
  ExpectPointNear(q[0], {110, 205}, 1e-9);
  ExpectPointNear(q[1], {130, 205}, 1e-9);
  ExpectPointNear(q[2], {130, 235}, 1e-9);
  ExpectPointNear(q[3], {110, 235}, 1e-9);
  const Quad full = ProjectBox(m, {0, 0, 400, 40});
  ExpectPointNear(full[0], {100, 200}, 1e-9);
  ExpectPointNear(full[2], {500, 240}, 1e-9);
}

TEST(ProjectBoxTest, DisjointCropBoxesProjectToDisjointQuads) {
  const Fixture f = GenerateFixture({.seed = 26, .curvature = 0.6});
  for (size_t i = 0; i < f.perfect.lines.size(); ++i) {
    const CropMapping m = MappingFor(f.perfect.lines[i], f.perfect.image_size, f.perfect.recognitions[i]);
    const double w = m.crop_width();
    std::vector<Polygon> quads;
    for (int k = 0; k < 8; ++k) {
      const Quad q = ProjectBox(m, {w * k / 8 + 0.5, 4, w * (k + 1) / 8 - 0.5, 30});
      quads.emplace_back(q.begin(), q.end());
    }
    for (size_t a = 0; a < quads.size(); ++a) {
      for (size_t b = a + 1; b < quads.size(); ++b) {
        EXPECT_EQ(oracle::RasterizePair(quads[a], quads[b], 256).intersection, 0.0);
      }
    }
  }
}

}  // namespace
}  // namespace hts
