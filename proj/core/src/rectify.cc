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

#include "hts/rectify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hts/errors.h"
#include "hts/polygon.h"

namespace hts {

namespace {

constexpr int kHeightSamples = 16;
constexpr int kMidlineSegments = 128;
constexpr int kRootGrid = 128;
constexpr int kBisectionSteps = 64;

Point2 ToPixels(Point2 p, ImageSize size) {
  return {p.x * size.width, p.y * size.height};
}

BezierCurve ScaleCurve(const BezierCurve& c, ImageSize size) {
  std::vector<Point2> pts;
  pts.reserve(c.control_points().size());
  for (const Point2& p : c.control_points()) pts.push_back(ToPixels(p, size));
  return BezierCurve(std::move(pts));
}

// Top and bottom points at parameter t, in image pixels.
struct Rung {
  Point2 top;
  Point2 bottom;
};

Rung RungAt(const CropMapping& m, double t) {
  return {ToPixels(EvalBezier(m.polygon().top(), t), m.image_size()),
          ToPixels(EvalBezier(m.polygon().bottom(), t), m.image_size())};
}

struct Candidate {
  double t = 0.0;
  double r = 0.0;
  double residual = std::numeric_limits<double>::infinity();
};

Candidate ProjectOnRung(const CropMapping& m, double t, Point2 q) {
  const Rung rung = RungAt(m, t);
  const Point2 seg = rung.bottom - rung.top;
  const double len2 = Dot(seg, seg);
  double r = len2 > 0.0 ? Dot(q - rung.top, seg) / len2 : 0.0;
  r = std::clamp(r, 0.0, 1.0);
  return {t, r, Distance(rung.top + r * seg, q)};
}

}  // namespace

CropMapping::CropMapping(BezierLinePolygon polygon, int crop_width,
                         int crop_height, ImageSize image_size)
    : polygon_(std::move(polygon)),
      crop_width_(crop_width),
      crop_height_(crop_height),
      image_size_(image_size) {
  if (crop_width_ < 1 || crop_height_ < 1) {
    throw DomainError("crop size must be at least 1x1, got " +
                      std::to_string(crop_width_) + "x" +
                      std::to_string(crop_height_));
  }
  if (image_size_.width < 1 || image_size_.height < 1) {
    throw DomainError("image size must be at least 1x1");
  }
}

int ComputeCropWidth(const BezierLinePolygon& poly, ImageSize image_size,
                     int crop_height, int max_width) {
  if (crop_height < 1) throw DomainError("crop height must be >= 1");
  if (max_width < 1) throw DomainError("max crop width must be >= 1");
  const BezierCurve top = ScaleCurve(poly.top(), image_size);
  const BezierCurve bottom = ScaleCurve(poly.bottom(), image_size);
  const std::vector<Point2> ts = SampleCurve(top, kHeightSamples);
  const std::vector<Point2> bs = SampleCurve(bottom, kHeightSamples);
  double height_sum = 0.0;
  for (int i = 0; i < kHeightSamples; ++i) height_sum += Distance(ts[i], bs[i]);
  const double mean_height = height_sum / kHeightSamples;
  if (!(mean_height > 0.0)) {
    throw DegenerateError("text line has zero mean height");
  }
  const BezierLinePolygon scaled(top, bottom, poly.confidence());
  const double length = ArcLength(scaled.Midline(), kMidlineSegments);
  const double width = std::round(crop_height * length / mean_height);
  return static_cast<int>(std::clamp(width, 1.0, static_cast<double>(max_width)));
}

Point2 CropToImage(const CropMapping& mapping, Point2 p) {
  if (!(p.x >= 0.0 && p.x <= mapping.crop_width() && p.y >= 0.0 &&
        p.y <= mapping.crop_height())) {
    throw DomainError("crop point (" + std::to_string(p.x) + ", " +
                      std::to_string(p.y) + ") outside " +
                      std::to_string(mapping.crop_width()) + "x" +
                      std::to_string(mapping.crop_height()));
  }
  const double t = p.x / mapping.crop_width();
  const double r = p.y / mapping.crop_height();
  const Rung rung = RungAt(mapping, t);
  return Lerp(rung.top, rung.bottom, r);
}

Point2 ImageToCrop(const CropMapping& mapping, Point2 q) {
  // q lies on the rung at t exactly when cross(bottom - top, q - top) = 0.
  auto side = [&](double t) {
    const Rung rung = RungAt(mapping, t);
    return Cross(rung.bottom - rung.top, q - rung.top);
  };

  Candidate best = ProjectOnRung(mapping, 0.0, q);
  auto consider = [&](double t) {
    const Candidate c = ProjectOnRung(mapping, t, q);
    if (c.residual < best.residual) best = c;
  };
  consider(1.0);

  double t_prev = 0.0;
  double f_prev = side(0.0);
  for (int i = 1; i <= kRootGrid; ++i) {
    const double t = static_cast<double>(i) / kRootGrid;
    const double f = side(t);
    if (f == 0.0) {
      consider(t);
    } else if (f_prev != 0.0 && (f < 0.0) != (f_prev < 0.0)) {
      double lo = t_prev, hi = t, f_lo = f_prev;
      for (int k = 0; k < kBisectionSteps && hi - lo > 1e-16; ++k) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = side(mid);
        if (f_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      consider(0.5 * (lo + hi));
    }
    t_prev = t;
    f_prev = f;
  }

  if (best.residual <= kInverseTolerancePx) {
    return {best.t * mapping.crop_width(), best.r * mapping.crop_height()};
  }
  const BoundaryPolygon boundary = PolygonBoundary(mapping.polygon(), 64);
  Polygon px;
  px.reserve(boundary.points.size());
  for (const Point2& p : boundary.points) {
    px.push_back(ToPixels(p, mapping.image_size()));
  }
  if (PointInPolygon(px, q)) {
    throw NumericalError("crop inverse did not converge", best.residual);
  }
  throw NoPreimageError("image point (" + std::to_string(q.x) + ", " +
                        std::to_string(q.y) + ") is outside the line region");
}

RectifiedCrop CropRectify(const GrayImage& image, const BezierLinePolygon& poly,
                          int crop_height, int max_width) {
  if (image.empty()) throw DomainError("cannot rectify from an empty image");
  const int crop_width = ComputeCropWidth(poly, image.size(), crop_height, max_width);
  CropMapping mapping(poly, crop_width, crop_height, image.size());
  GrayImage crop(crop_width, crop_height);
  for (int u = 0; u < crop_width; ++u) {
    const Rung rung = RungAt(mapping, (u + 0.5) / crop_width);
    for (int v = 0; v < crop_height; ++v) {
      const Point2 q = Lerp(rung.top, rung.bottom, (v + 0.5) / crop_height);
      crop.at(u, v) = image.SampleBilinear(q.x - 0.5, q.y - 0.5);
    }
  }
  return {std::move(crop), std::move(mapping)};
}

Quad ProjectBox(const CropMapping& mapping, const Box& box) {
  return {CropToImage(mapping, {box.x0, box.y0}),
          CropToImage(mapping, {box.x1, box.y0}),
          CropToImage(mapping, {box.x1, box.y1}),
          CropToImage(mapping, {box.x0, box.y1})};
}

}  // namespace hts
