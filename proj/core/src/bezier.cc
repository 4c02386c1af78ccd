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

#include "hts/bezier.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "hts/errors.h"
#include "hts/polygon.h"

namespace hts {

namespace {

double Binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// B_{j,m}(t) for j = 0..m.
std::vector<double> BernsteinBasis(int m, double t) {
  std::vector<double> b(m + 1);
  const double s = 1.0 - t;
  for (int j = 0; j <= m; ++j) {
    b[j] = Binomial(m, j) * std::pow(t, j) * std::pow(s, m - j);
  }
  return b;
}

Point2 EvalUnchecked(const std::vector<Point2>& p, double t) {
  if (t == 0.0) return p.front();
  if (t == 1.0) return p.back();
  const int m = static_cast<int>(p.size()) - 1;
  const std::vector<double> b = BernsteinBasis(m, t);
  Point2 out;
  for (int j = 0; j <= m; ++j) {
    out.x += b[j] * p[j].x;
    out.y += b[j] * p[j].y;
  }
  return out;
}

// Control points of the hodograph (order m - 1).
std::vector<Point2> Derivative(const std::vector<Point2>& p) {
  const int m = static_cast<int>(p.size()) - 1;
  std::vector<Point2> d;
  d.reserve(m);
  for (int j = 0; j < m; ++j) d.push_back(m * (p[j + 1] - p[j]));
  return d;
}

// Roots in (0, 1) of a Bernstein polynomial of order <= 2 with scalar
// coefficients c.
std::vector<double> RootsInUnitInterval(const std::vector<double>& c) {
  std::vector<double> roots;
  auto keep = [&](double t) {
    if (t > 0.0 && t < 1.0) roots.push_back(t);
  };
  if (c.size() == 2) {
    const double denom = c[0] - c[1];
    if (denom != 0.0) keep(c[0] / denom);
  } else if (c.size() == 3) {
    // Power form a t^2 + b t + c0.
    const double a = c[0] - 2 * c[1] + c[2];
    const double b = 2 * (c[1] - c[0]);
    const double c0 = c[0];
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c0)});
    if (scale == 0.0) return roots;
    if (std::abs(a) <= 1e-14 * scale) {
      if (b != 0.0) keep(-c0 / b);
      return roots;
    }
    const double disc = b * b - 4 * a * c0;
    if (disc < 0.0) return roots;
    const double sq = std::sqrt(disc);
    // Numerically stable pair.
    const double q = -0.5 * (b + std::copysign(sq, b));
    if (q != 0.0) {
      keep(q / a);
      keep(c0 / q);
    } else {
      keep(0.0);
    }
  }
  return roots;
}

Point2 EvalDerivative(const std::vector<Point2>& d, double t) {
  if (d.size() == 1) return d.front();
  return EvalUnchecked(d, t);
}

std::vector<double> ChordLengthParams(std::span<const Point2> pts) {
  std::vector<double> t(pts.size(), 0.0);
  for (size_t i = 1; i < pts.size(); ++i) {
    t[i] = t[i - 1] + Distance(pts[i - 1], pts[i]);
  }
  const double total = t.back();
  if (total <= 0.0) return t;
  for (double& v : t) v /= total;
  t.back() = 1.0;
  return t;
}

// Square roots of the chord lengths.
std::vector<double> CentripetalParams(std::span<const Point2> pts) {
  std::vector<double> t(pts.size(), 0.0);
  for (size_t i = 1; i < pts.size(); ++i) {
    t[i] = t[i - 1] + std::sqrt(Distance(pts[i - 1], pts[i]));
  }
  const double total = t.back();
  if (total <= 0.0) return t;
  for (double& v : t) v /= total;
  t.back() = 1.0;
  return t;
}

std::vector<double> UniformParams(size_t n) {
  std::vector<double> t(n);
  for (size_t i = 0; i < n; ++i) t[i] = static_cast<double>(i) / (n - 1);
  return t;
}

// Solves for the interior control points with both endpoints pinned.
// Returns false when the system is rank deficient.
bool SolveInterior(std::span<const Point2> pts, const std::vector<double>& t,
                   int m, std::vector<Point2>& ctrl) {
  ctrl.assign(m + 1, Point2{});
  ctrl.front() = pts.front();
  ctrl.back() = pts.back();
  if (m == 1) return true;
  const int n = static_cast<int>(pts.size());
  const int k = m - 1;
  Eigen::MatrixXd a(n, k);
  Eigen::MatrixXd rhs(n, 2);
  for (int i = 0; i < n; ++i) {
    const std::vector<double> b = BernsteinBasis(m, t[i]);
    for (int j = 0; j < k; ++j) a(i, j) = b[j + 1];
    const Point2 fixed = b[0] * ctrl.front() + b[m] * ctrl.back();
    rhs(i, 0) = pts[i].x - fixed.x;
    rhs(i, 1) = pts[i].y - fixed.y;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < k) return false;
  const Eigen::MatrixXd sol = qr.solve(rhs);
  for (int j = 0; j < k; ++j) ctrl[j + 1] = {sol(j, 0), sol(j, 1)};
  return true;
}

double Rms(std::span<const Point2> pts, const std::vector<double>& t,
           const std::vector<Point2>& ctrl) {
  double sum = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Point2 d = EvalUnchecked(ctrl, t[i]) - pts[i];
    sum += Dot(d, d);
  }
  return std::sqrt(sum / pts.size());
}

// One Newton step per interior parameter on |B(t) - q|^2.
void Reparameterize(std::span<const Point2> pts, std::vector<double>& t,
                    const std::vector<Point2>& ctrl) {
  const std::vector<Point2> d1 = Derivative(ctrl);
  const std::vector<Point2> d2 =
      d1.size() >= 2 ? Derivative(d1) : std::vector<Point2>{};
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    const Point2 diff = EvalUnchecked(ctrl, t[i]) - pts[i];
    const Point2 v1 = EvalDerivative(d1, t[i]);
    const Point2 v2 = d2.empty() ? Point2{} : EvalDerivative(d2, t[i]);
    const double num = Dot(diff, v1);
    const double den = Dot(v1, v1) + Dot(diff, v2);
    if (den <= 0.0) continue;
    // Samples keep their polyline order along the curve.
    t[i] = std::clamp(t[i] - num / den, t[i - 1], t[i + 1]);
  }
}

double SumSquares(std::span<const Point2> pts, const std::vector<double>& t,
                  const std::vector<Point2>& ctrl) {
  double sum = 0.0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Point2 d = EvalUnchecked(ctrl, t[i]) - pts[i];
    sum += Dot(d, d);
  }
  return sum;
}

// Levenberg-Marquardt on the interior control points and interior
// parameters jointly. Each parameter touches only its own residual, so the
// parameters are eliminated with a Schur complement and every step solves a
// 2(m-1) system.
// Steps that would reorder the samples are rejected. Parameters may leave
// [0, 1] here so that a sample cannot get stuck against an end; callers clamp
// afterwards.
void RefineJoint(std::span<const Point2> pts, std::vector<double>& t,
                 std::vector<Point2>& ctrl) {
  const int m = static_cast<int>(ctrl.size()) - 1;
  const int k = 2 * (m - 1);
  const size_t n = pts.size();
  if (k == 0 || n < 3) return;
  double cost = SumSquares(pts, t, ctrl);
  double lambda = 1e-3;
  constexpr int kMaxSteps = 500;
  for (int step = 0; step < kMaxSteps && cost > 0.0; ++step) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, k);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(k);
    std::vector<Eigen::VectorXd> h_pt(n);
    std::vector<double> h_tt(n, 0.0), g_t(n, 0.0);
    const std::vector<Point2> d1 = Derivative(ctrl);
    for (size_t i = 0; i < n; ++i) {
      const std::vector<double> b = BernsteinBasis(m, t[i]);
      const Point2 r = EvalUnchecked(ctrl, t[i]) - pts[i];
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, k);
      for (int j = 1; j < m; ++j) {
        a(0, 2 * (j - 1)) = b[j];
        a(1, 2 * (j - 1) + 1) = b[j];
      }
      const Eigen::Vector2d rv(r.x, r.y);
      h += a.transpose() * a;
      g += a.transpose() * rv;
      if (i == 0 || i + 1 == n) continue;
      const Point2 dv = EvalDerivative(d1, t[i]);
      const Eigen::Vector2d d(dv.x, dv.y);
      h_pt[i] = a.transpose() * d;
      h_tt[i] = d.squaredNorm();
      g_t[i] = d.dot(rv);
    }
    bool improved = false;
    while (!improved && lambda < 1e12) {
      Eigen::MatrixXd s = h;
      Eigen::VectorXd rhs = -g;
      s.diagonal() *= 1.0 + lambda;
      s.diagonal().array() += 1e-15;
      std::vector<double> tt(n, 0.0);
      for (size_t i = 1; i + 1 < n; ++i) {
        tt[i] = h_tt[i] * (1.0 + lambda) + 1e-15;
        s -= h_pt[i] * h_pt[i].transpose() / tt[i];
        rhs += h_pt[i] * g_t[i] / tt[i];
      }
      const Eigen::VectorXd dp = s.ldlt().solve(rhs);
      std::vector<Point2> ctrl_next = ctrl;
      for (int j = 1; j < m; ++j) {
        ctrl_next[j].x += dp(2 * (j - 1));
        ctrl_next[j].y += dp(2 * (j - 1) + 1);
      }
      std::vector<double> t_next = t;
      for (size_t i = 1; i + 1 < n; ++i) {
        const double dt = -(g_t[i] + h_pt[i].dot(dp)) / tt[i];
        t_next[i] = t[i] + dt;
      }
      const bool ordered = std::is_sorted(t_next.begin(), t_next.end());
      const double next = ordered ? SumSquares(pts, t_next, ctrl_next) : cost;
      if (std::isfinite(next) && next < cost) {
        const double gain = cost - next;
        ctrl = std::move(ctrl_next);
        t = std::move(t_next);
        cost = next;
        lambda = std::max(lambda / 3.0, 1e-12);
        improved = true;
        if (gain <= 1e-15 * cost) return;
      } else {
        lambda *= 4.0;
      }
    }
    if (!improved) return;
  }
}

struct Candidate {
  std::vector<Point2> ctrl;
  double rms = 0.0;
};

// Alternating Newton reparameterization and refit, then joint refinement.
Candidate Refine(std::span<const Point2> pts, std::vector<double> t,
                 std::vector<Point2> ctrl) {
  const int order = static_cast<int>(ctrl.size()) - 1;
  double rms = Rms(pts, t, ctrl);
  constexpr int kAlternations = 50;
  for (int it = 0; it < kAlternations && rms > 1e-14; ++it) {
    std::vector<double> t_next = t;
    Reparameterize(pts, t_next, ctrl);
    std::vector<Point2> ctrl_next;
    if (!SolveInterior(pts, t_next, order, ctrl_next)) break;
    const double rms_next = Rms(pts, t_next, ctrl_next);
    if (!(rms_next < rms)) break;
    const double gain = rms - rms_next;
    t = std::move(t_next);
    ctrl = std::move(ctrl_next);
    rms = rms_next;
    if (gain < 1e-16 * (1.0 + rms)) break;
  }
  RefineJoint(pts, t, ctrl);
  for (double& v : t) v = std::clamp(v, 0.0, 1.0);
  Reparameterize(pts, t, ctrl);
  return {ctrl, Rms(pts, t, ctrl)};
}

size_t CountDistinct(std::span<const Point2> pts) {
  std::vector<std::pair<double, double>> v;
  v.reserve(pts.size());
  for (const Point2& p : pts) v.emplace_back(p.x, p.y);
  std::sort(v.begin(), v.end());
  return std::unique(v.begin(), v.end()) - v.begin();
}

}  // namespace

BezierCurve::BezierCurve(std::vector<Point2> control_points)
    : points_(std::move(control_points)) {
  if (points_.size() < 2) {
    throw DomainError("Bezier curve needs at least 2 control points, got " +
                      std::to_string(points_.size()));
  }
  for (const Point2& p : points_) {
    if (!IsFinite(p)) throw DomainError("non-finite Bezier control point");
  }
}

BezierLinePolygon::BezierLinePolygon(BezierCurve top, BezierCurve bottom,
                                     double confidence)
    : top_(std::move(top)), bottom_(std::move(bottom)), confidence_(confidence) {
  if (top_.order() != bottom_.order()) {
    throw DomainError("top and bottom curves differ in order: " +
                      std::to_string(top_.order()) + " vs " +
                      std::to_string(bottom_.order()));
  }
  if (!(confidence_ >= 0.0 && confidence_ <= 1.0)) {
    throw DomainError("line confidence outside [0, 1]");
  }
}

BezierCurve BezierLinePolygon::Midline() const {
  std::vector<Point2> mid;
  const auto& a = top_.control_points();
  const auto& b = bottom_.control_points();
  mid.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) mid.push_back(Lerp(a[i], b[i], 0.5));
  return BezierCurve(std::move(mid));
}

Point2 EvalBezier(const BezierCurve& curve, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("Bezier parameter outside [0, 1]: " + std::to_string(t));
  }
  return EvalUnchecked(curve.control_points(), t);
}

std::vector<Point2> SampleCurve(const BezierCurve& curve, int n) {
  if (n < 2) throw DomainError("need at least 2 samples per curve");
  std::vector<Point2> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1);
    out.push_back(EvalUnchecked(curve.control_points(), t));
  }
  return out;
}

Aabb CurveTightBbox(const BezierCurve& curve) {
  const auto& p = curve.control_points();
  double min_x = std::min(p.front().x, p.back().x);
  double max_x = std::max(p.front().x, p.back().x);
  double min_y = std::min(p.front().y, p.back().y);
  double max_y = std::max(p.front().y, p.back().y);
  auto include = [&](Point2 q) {
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  };
  if (curve.order() <= kMaxExactBboxOrder) {
    const std::vector<Point2> d = Derivative(p);
    if (d.size() >= 2) {
      std::vector<double> dx, dy;
      for (const Point2& q : d) {
        dx.push_back(q.x);
        dy.push_back(q.y);
      }
      for (double t : RootsInUnitInterval(dx)) include(EvalUnchecked(p, t));
      for (double t : RootsInUnitInterval(dy)) include(EvalUnchecked(p, t));
    }
  } else {
    for (const Point2& q : SampleCurve(curve, kDenseBboxSamples)) include(q);
  }
  return Aabb::FromExtents(min_x, min_y, max_x, max_y);
}

double ArcLength(const BezierCurve& curve, int n_seg) {
  if (n_seg < 1) throw DomainError("arc length needs at least one segment");
  const std::vector<Point2> s = SampleCurve(curve, n_seg + 1);
  double len = 0.0;
  for (size_t i = 1; i < s.size(); ++i) len += Distance(s[i - 1], s[i]);
  return len;
}

BezierFit FitBezier(std::span<const Point2> polyline, int order) {
  if (order < 1) throw DomainError("Bezier order must be >= 1");
  if (polyline.size() < 2 ||
      CountDistinct(polyline) < static_cast<size_t>(order) + 1) {
    throw DomainError("fitting order " + std::to_string(order) +
                      " needs at least " + std::to_string(order + 1) +
                      " distinct points, got " +
                      std::to_string(CountDistinct(polyline)));
  }
  for (const Point2& p : polyline) {
    if (!IsFinite(p)) throw DomainError("non-finite polyline point");
  }

  // Chord length is the primary start; centripetal and uniform starts are
  // also refined and the lowest residual wins, chord length on ties.
  const std::vector<double> chord = ChordLengthParams(polyline);
  std::vector<Point2> ctrl;
  bool fallback = false;
  std::optional<Candidate> best;
  if (SolveInterior(polyline, chord, order, ctrl)) {
    best = Refine(polyline, chord, std::move(ctrl));
  } else {
    fallback = true;
  }
  for (const std::vector<double>& start :
       {CentripetalParams(polyline), UniformParams(polyline.size())}) {
    if (!SolveInterior(polyline, start, order, ctrl)) continue;
    Candidate c = Refine(polyline, start, std::move(ctrl));
    if (!best || c.rms < best->rms) best = std::move(c);
  }
  if (!best) throw DegenerateError("Bezier fit is rank deficient");
  return BezierFit{BezierCurve(std::move(best->ctrl)), best->rms, fallback};
}

BoundaryPolygon PolygonBoundary(const BezierLinePolygon& poly,
                                int n_per_side) {
  if (n_per_side < 2) throw DomainError("need at least 2 samples per side");
  BoundaryPolygon out;
  out.points = SampleCurve(poly.top(), n_per_side);
  std::vector<Point2> bottom = SampleCurve(poly.bottom(), n_per_side);
  out.points.insert(out.points.end(), bottom.rbegin(), bottom.rend());
  out.self_intersecting = !IsSimple(out.points);
  const Aabb box = BoundsOf(out.points);
  const double scale = std::max(box.w, box.h);
  out.degenerate = SignedArea(out.points) <= 1e-12 * scale * scale;
  return out;
}

}  // namespace hts
