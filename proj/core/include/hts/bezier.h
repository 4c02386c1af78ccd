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

// Bezier curves and the two-curve text-line polygon built from them.
//
// A text line is bounded by a top and a bottom curve of equal order m, both
// running left to right in reading order. The closed boundary is the top
// samples followed by the bottom samples in reverse. With y pointing down and
// the top curve above the bottom one, the shoelace signed area of that
// boundary is positive.

#ifndef HTS_BEZIER_H_
#define HTS_BEZIER_H_

#include <span>
#include <vector>

#include "hts/geometry.h"

namespace hts {

inline constexpr int kDefaultBezierOrder = 3;
inline constexpr int kDefaultSamplesPerSide = 16;
// Orders above this use dense sampling for the tight box.
inline constexpr int kMaxExactBboxOrder = 3;
inline constexpr int kDenseBboxSamples = 4096;

class BezierCurve {
 public:
  // Throws DomainError on fewer than 2 points or non-finite coordinates.
  explicit BezierCurve(std::vector<Point2> control_points);

  int order() const { return static_cast<int>(points_.size()) - 1; }
  const std::vector<Point2>& control_points() const { return points_; }
  Point2 front() const { return points_.front(); }
  Point2 back() const { return points_.back(); }

  friend bool operator==(const BezierCurve&, const BezierCurve&) = default;

 private:
  std::vector<Point2> points_;
};

class BezierLinePolygon {
 public:
  // Throws DomainError when the orders differ or confidence is outside [0,1].
  BezierLinePolygon(BezierCurve top, BezierCurve bottom,
                    double confidence = 1.0);

  const BezierCurve& top() const { return top_; }
  const BezierCurve& bottom() const { return bottom_; }
  double confidence() const { return confidence_; }
  int order() const { return top_.order(); }

  // Curve that averages the top and bottom control points pairwise.
  BezierCurve Midline() const;

  friend bool operator==(const BezierLinePolygon&,
                         const BezierLinePolygon&) = default;

 private:
  BezierCurve top_;
  BezierCurve bottom_;
  double confidence_;
};

// Bernstein evaluation. Throws DomainError when t is outside [0, 1].
Point2 EvalBezier(const BezierCurve& curve, double t);

// n parameter-uniform samples, t = i / (n - 1). Requires n >= 2.
std::vector<Point2> SampleCurve(const BezierCurve& curve, int n);

// Exact axis extent from the derivative roots for order <= 3, dense
// sampling above that.
Aabb CurveTightBbox(const BezierCurve& curve);

// Chord sum over n_seg + 1 parameter-uniform samples. Requires n_seg >= 1.
double ArcLength(const BezierCurve& curve, int n_seg);

struct BezierFit {
  BezierCurve curve;
  // Root-mean-square distance from each input point to its fitted point.
  double rms = 0.0;
  // Set when the chord-length system was rank deficient and the fit was
  // redone on a uniform parameterization.
  bool uniform_fallback = false;
};

// Least-squares fit with pinned endpoints. Parameters start from chord
// length (centripetal and uniform starts are tried as well) and are refined
// by alternating Newton projection with refits, then by joint
// Levenberg-Marquardt over control points and parameters. Samples of a
// loop-free curve of the requested order are recovered exactly.
// Throws DomainError with fewer than order + 1 distinct points.
BezierFit FitBezier(std::span<const Point2> polyline, int order);

struct BoundaryPolygon {
  Polygon points;
  bool self_intersecting = false;
  // Near-zero area, or area of the wrong sign (top curve below bottom).
  bool degenerate = false;
};

// Top samples left to right followed by bottom samples right to left.
// Requires n_per_side >= 2. Problems are reported in the flags, not thrown.
BoundaryPolygon PolygonBoundary(const BezierLinePolygon& poly,
                                int n_per_side = kDefaultSamplesPerSide);

}  // namespace hts

#endif  // HTS_BEZIER_H_
