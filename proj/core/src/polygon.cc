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

#include "hts/polygon.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

#include "hts/errors.h"

namespace hts {

namespace bg = boost::geometry;

namespace {

using BgPoint = bg::model::d2::point_xy<double>;
// Counter-clockwise in the y-up sense, which is what a positive shoelace
// area means.
using BgPolygon = bg::model::polygon<BgPoint, /*ClockWise=*/false>;
using BgMulti = bg::model::multi_polygon<BgPolygon>;

// Raster cells across the larger extent when even-odd faces are ill formed.
constexpr double kCleanRasterCells = 1024.0;

double Orient(Point2 a, Point2 b, Point2 c) { return Cross(b - a, c - a); }

bool OnSegment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int Sign(double v) { return (v > 0) - (v < 0); }

Polygon DropRepeats(std::span<const Point2> ring) {
  Polygon out;
  for (const Point2& p : ring) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

BgPolygon ToBgPolygon(std::span<const Point2> ring) {
  BgPolygon poly;
  for (const Point2& p : ring) poly.outer().emplace_back(p.x, p.y);
  if (!ring.empty()) poly.outer().emplace_back(ring.front().x, ring.front().y);
  bg::correct(poly);
  return poly;
}

template <typename BgRing>
Polygon FromBgRing(const BgRing& ring) {
  Polygon out;
  for (const BgPoint& p : ring) out.push_back({p.x(), p.y()});
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

RegionSet FromBg(const BgMulti& multi) {
  RegionSet out;
  for (const BgPolygon& poly : multi) {
    Region r;
    r.outer = FromBgRing(poly.outer());
    for (const auto& hole : poly.inners()) r.holes.push_back(FromBgRing(hole));
    out.push_back(std::move(r));
  }
  return out;
}

BgMulti ToBg(const RegionSet& set) {
  BgMulti multi;
  for (const Region& r : set) {
    BgPolygon poly;
    for (const Point2& p : r.outer) poly.outer().emplace_back(p.x, p.y);
    if (!r.outer.empty()) {
      poly.outer().emplace_back(r.outer.front().x, r.outer.front().y);
    }
    for (const Polygon& h : r.holes) {
      poly.inners().push_back({});
      for (const Point2& p : h) poly.inners().back().emplace_back(p.x, p.y);
      if (!h.empty()) poly.inners().back().emplace_back(h.front().x, h.front().y);
    }
    bg::correct(poly);
    multi.push_back(std::move(poly));
  }
  return multi;
}

// Even-odd interior of a self-crossing ring. The ring is split at its
// crossings into a planar graph whose faces are traced; faces on the two
// sides of an edge have opposite parity, so a walk outward from the
// unbounded face labels them all. Returns nullopt on touching vertices or
// overlapping edges, where the graph is not well formed.
std::optional<RegionSet> EvenOddFaces(const Polygon& ring) {
  const int n = static_cast<int>(ring.size());
  std::vector<Point2> nodes(ring.begin(), ring.end());
  // Per ring edge: (parameter, node id) of every node on it.
  std::vector<std::vector<std::pair<double, int>>> on(n);
  for (int i = 0; i < n; ++i) {
    on[i].push_back({0.0, i});
    on[i].push_back({1.0, (i + 1) % n});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Point2 a0 = ring[i];
      const Point2 a1 = ring[(i + 1) % n];
      const Point2 b0 = ring[j];
      const Point2 b1 = ring[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const Point2 r = a1 - a0;
      const Point2 s = b1 - b0;
      const double den = Cross(r, s);
      if (den == 0.0) {
        if (Cross(b0 - a0, r) != 0.0) continue;
        const Point2 shared = j == i + 1 ? a1 : a0;
        const Point2 u = (j == i + 1 ? a0 : a1) - shared;
        const Point2 v = (j == i + 1 ? b1 : b0) - shared;
        if (adjacent ? Dot(u, v) > 0.0
                     : OnSegment(a0, a1, b0) || OnSegment(a0, a1, b1) ||
                           OnSegment(b0, b1, a0) || OnSegment(b0, b1, a1)) {
          return std::nullopt;
        }
        continue;
      }
      if (adjacent) continue;
      const double t = Cross(b0 - a0, s) / den;
      const double u = Cross(b0 - a0, r) / den;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      if (t == 0 || t == 1 || u == 0 || u == 1) return std::nullopt;
      const int id = static_cast<int>(nodes.size());
      nodes.push_back(a0 + t * r);
      on[i].push_back({t, id});
      on[j].push_back({u, id});
    }
  }

  // Half-edge h runs from[h] -> to[h]; its twin is h ^ 1.
  std::vector<int> from;
  std::vector<int> to;
  for (auto& list : on) {
    std::sort(list.begin(), list.end());
    for (size_t k = 0; k + 1 < list.size(); ++k) {
      const int a = list[k].second;
      const int b = list[k + 1].second;
      if (a == b || nodes[a] == nodes[b]) return std::nullopt;
      from.push_back(a);
      to.push_back(b);
      from.push_back(b);
      to.push_back(a);
    }
  }
  const int halves = static_cast<int>(from.size());
  std::vector<std::vector<int>> out(nodes.size());
  for (int h = 0; h < halves; ++h) out[from[h]].push_back(h);
  std::vector<int> slot(halves);
  for (auto& list : out) {
    auto angle = [&](int h) {
      const Point2 d = nodes[to[h]] - nodes[from[h]];
      return std::atan2(d.y, d.x);
    };
    std::sort(list.begin(), list.end(),
              [&](int a, int b) { return angle(a) < angle(b); });
    for (size_t k = 0; k < list.size(); ++k) {
      if (k > 0 && angle(list[k]) == angle(list[k - 1])) return std::nullopt;
      slot[list[k]] = static_cast<int>(k);
    }
  }
  // With the face on the left, the walk continues along the edge leaving
  // the far node just clockwise of the way back.
  auto next = [&](int h) {
    const std::vector<int>& list = out[to[h]];
    const int k = slot[h ^ 1];
    return list[(k + static_cast<int>(list.size()) - 1) % list.size()];
  };

  std::vector<int> face(halves, -1);
  std::vector<std::vector<int>> walks;
  std::vector<double> areas;
  for (int h0 = 0; h0 < halves; ++h0) {
    if (face[h0] >= 0) continue;
    const int f = static_cast<int>(walks.size());
    std::vector<int> walk;
    double twice = 0.0;
    for (int h = h0; face[h] < 0; h = next(h)) {
      face[h] = f;
      walk.push_back(from[h]);
      twice += Cross(nodes[from[h]], nodes[to[h]]);
    }
    walks.push_back(std::move(walk));
    areas.push_back(twice / 2);
  }
  const int faces = static_cast<int>(walks.size());
  const auto outer = std::min_element(areas.begin(), areas.end()) - areas.begin();
  std::vector<int> parity(faces, -1);
  parity[outer] = 0;
  std::vector<int> queue{static_cast<int>(outer)};
  for (size_t q = 0; q < queue.size(); ++q) {
    const int f = queue[q];
    for (int h = 0; h < halves; ++h) {
      if (face[h] != f) continue;
      const int g = face[h ^ 1];
      if (parity[g] < 0) {
        parity[g] = 1 - parity[f];
        queue.push_back(g);
      } else if (parity[g] == parity[f]) {
        return std::nullopt;
      }
    }
  }

  RegionSet result;
  for (int f = 0; f < faces; ++f) {
    if (f == outer || parity[f] != 1) continue;
    // A walk that revisits a node is pinched there; it splits into a
    // counter-clockwise outline and clockwise holes touching it.
    std::vector<std::vector<int>> cycles;
    std::vector<int> stack;
    for (int id : walks[f]) {
      const auto it = std::find(stack.begin(), stack.end(), id);
      if (it != stack.end()) {
        cycles.emplace_back(it, stack.end());
        stack.erase(it + 1, stack.end());
      } else {
        stack.push_back(id);
      }
    }
    cycles.push_back(std::move(stack));
    std::vector<Region> outers;
    std::vector<std::vector<int>> outer_ids;
    std::vector<std::vector<int>> hole_ids;
    for (auto& c : cycles) {
      if (c.size() < 3) continue;
      Polygon poly;
      for (int id : c) poly.push_back(nodes[id]);
      const double a = SignedArea(poly);
      if (a > 0) {
        outers.push_back({std::move(poly), {}});
        outer_ids.push_back(std::move(c));
      } else if (a < 0) {
        hole_ids.push_back(std::move(c));
      }
    }
    for (const auto& c : hole_ids) {
      Polygon hole;
      for (int id : c) hole.push_back(nodes[id]);
      for (size_t o = 0; o < outers.size(); ++o) {
        const auto probe = std::find_if(c.begin(), c.end(), [&](int id) {
          return std::find(outer_ids[o].begin(), outer_ids[o].end(), id) ==
                 outer_ids[o].end();
        });
        if (probe == c.end() || PointInPolygon(outers[o].outer, nodes[*probe])) {
          outers[o].holes.push_back(hole);
          break;
        }
      }
    }
    for (Region& r : outers) result.push_back(std::move(r));
  }
  return result;
}

BgMulti UnionRange(const std::vector<BgMulti>& parts, size_t lo, size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const size_t mid = lo + (hi - lo) / 2;
  BgMulti out;
  bg::union_(UnionRange(parts, lo, mid), UnionRange(parts, mid, hi), out);
  return out;
}

}  // namespace

double SignedArea(std::span<const Point2> ring) {
  const size_t n = ring.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (size_t i = 0; i < n; ++i) {
    twice += Cross(ring[i], ring[(i + 1) % n]);
  }
  return twice / 2;
}

double Area(std::span<const Point2> ring) { return std::abs(SignedArea(ring)); }

bool PointInPolygon(std::span<const Point2> ring, Point2 p) {
  const size_t n = ring.size();
  if (n == 0) return false;
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = ring[j];
    const Point2 b = ring[i];
    if (Orient(a, b, p) == 0.0 && OnSegment(a, b, p)) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

bool SegmentsIntersect(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  const int d1 = Sign(Orient(b0, b1, a0));
  const int d2 = Sign(Orient(b0, b1, a1));
  const int d3 = Sign(Orient(a0, a1, b0));
  const int d4 = Sign(Orient(a0, a1, b1));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && OnSegment(b0, b1, a0)) return true;
  if (d2 == 0 && OnSegment(b0, b1, a1)) return true;
  if (d3 == 0 && OnSegment(a0, a1, b0)) return true;
  if (d4 == 0 && OnSegment(a0, a1, b1)) return true;
  return false;
}

bool IsSimple(std::span<const Point2> ring) {
  const size_t n = ring.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Point2 a0 = ring[i];
    const Point2 a1 = ring[(i + 1) % n];
    if (a0 == a1) return false;
    for (size_t j = i + 1; j < n; ++j) {
      const Point2 b0 = ring[j];
      const Point2 b1 = ring[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared vertex is fine; folding back onto the previous edge is not.
        const Point2 shared = j == i + 1 ? a1 : a0;
        const Point2 u = (j == i + 1 ? a0 : a1) - shared;
        const Point2 v = (j == i + 1 ? b1 : b0) - shared;
        if (Cross(u, v) == 0.0 && Dot(u, v) > 0.0) return false;
        continue;
      }
      if (SegmentsIntersect(a0, a1, b0, b1)) return false;
    }
  }
  return true;
}

Aabb BoundsOf(std::span<const Point2> ring) {
  if (ring.empty()) return {};
  double min_x = ring[0].x, max_x = ring[0].x;
  double min_y = ring[0].y, max_y = ring[0].y;
  for (const Point2& p : ring) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  return Aabb::FromExtents(min_x, min_y, max_x, max_y);
}

Polygon ConvexHull(std::span<const Point2> points) {
  std::vector<Point2> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  Polygon hull(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && Orient(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  for (size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && Orient(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

Quad MinAreaRect(std::span<const Point2> points) {
  const Polygon hull = ConvexHull(points);
  if (hull.empty()) return {};
  if (hull.size() < 3) {
    const Point2 a = hull.front();
    const Point2 b = hull.back();
    return {a, b, b, a};
  }
  double best = std::numeric_limits<double>::infinity();
  Quad out{};
  for (size_t i = 0; i < hull.size(); ++i) {
    const Point2 e = hull[(i + 1) % hull.size()] - hull[i];
    const double len = Norm(e);
    if (len == 0.0) continue;
    const Point2 u = (1.0 / len) * e;
    const Point2 v{-u.y, u.x};
    double lo_u = std::numeric_limits<double>::infinity(), hi_u = -lo_u;
    double lo_v = lo_u, hi_v = -lo_u;
    for (const Point2& p : hull) {
      const double a = Dot(p, u);
      const double b = Dot(p, v);
      lo_u = std::min(lo_u, a);
      hi_u = std::max(hi_u, a);
      lo_v = std::min(lo_v, b);
      hi_v = std::max(hi_v, b);
    }
    const double area = (hi_u - lo_u) * (hi_v - lo_v);
    if (area < best) {
      best = area;
      out = {lo_u * u + lo_v * v, hi_u * u + lo_v * v, hi_u * u + hi_v * v,
             lo_u * u + hi_v * v};
    }
  }
  return out;
}

double Area(const RegionSet& set) {
  double a = 0.0;
  for (const Region& r : set) {
    a += Area(r.outer);
    for (const Polygon& h : r.holes) a -= Area(h);
  }
  return a;
}

Aabb BoundsOf(const RegionSet& set) {
  std::vector<Point2> all;
  for (const Region& r : set) all.insert(all.end(), r.outer.begin(), r.outer.end());
  return BoundsOf(all);
}

CleanedPolygon CleanPolygon(std::span<const Point2> ring) {
  CleanedPolygon out;
  const Polygon clean = DropRepeats(ring);
  if (clean.size() < 3) return out;
  out.was_self_intersecting = !IsSimple(clean);
  if (!out.was_self_intersecting) {
    if (Area(clean) > 0.0) out.region = FromBg(BgMulti{ToBgPolygon(clean)});
    return out;
  }
  if (std::optional<RegionSet> faces = EvenOddFaces(clean)) {
    out.region = std::move(*faces);
    return out;
  }
  const Aabb b = BoundsOf(clean);
  const double extent = std::max(b.w, b.h);
  if (!(extent > 0.0)) return out;
  const std::vector<Polygon> one{clean};
  out.region = RasterUnionOf(one, kCleanRasterCells / extent);
  return out;
}

RegionSet UnionOf(std::span<const Polygon> polygons) {
  std::vector<BgMulti> parts;
  double largest = 0.0;
  double total = 0.0;
  for (const Polygon& p : polygons) {
    BgMulti m = ToBg(CleanPolygon(p).region);
    if (m.empty()) continue;
    const double a = bg::area(m);
    largest = std::max(largest, a);
    total += a;
    parts.push_back(std::move(m));
  }
  if (parts.empty()) return {};
  try {
    const BgMulti exact = UnionRange(parts, 0, parts.size());
    const double a = bg::area(exact);
    const double tol = 1e-9 * std::max(1.0, total);
    if (bg::is_valid(exact) && a >= largest - tol && a <= total + tol) {
      return FromBg(exact);
    }
  } catch (const bg::exception&) {
  }
  return RasterUnionOf(polygons);
}

RegionSet RasterUnionOf(std::span<const Polygon> polygons, double cells_per_unit) {
  if (!(cells_per_unit > 0.0)) throw DomainError("cells_per_unit must be positive");
  std::vector<Polygon> rings;
  for (const Polygon& p : polygons) {
    Polygon r = DropRepeats(p);
    if (r.size() >= 3) rings.push_back(std::move(r));
  }
  if (rings.empty()) return {};
  std::vector<Point2> all;
  for (const Polygon& r : rings) all.insert(all.end(), r.begin(), r.end());
  const Aabb b = BoundsOf(all);
  const double cell = 1.0 / cells_per_unit;
  const long gy0 = static_cast<long>(std::floor(b.min_y() * cells_per_unit));
  const long gy1 = static_cast<long>(std::ceil(b.max_y() * cells_per_unit));

  using Spans = std::vector<std::pair<long, long>>;  // [begin, end) cell columns
  auto row_spans = [&](double y) {
    Spans spans;
    std::vector<double> xs;
    for (const Polygon& r : rings) {
      xs.clear();
      for (size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
        const Point2 a = r[j];
        const Point2 c = r[i];
        if ((a.y > y) != (c.y > y)) xs.push_back(a.x + (y - a.y) * (c.x - a.x) / (c.y - a.y));
      }
      std::sort(xs.begin(), xs.end());
      for (size_t k = 0; k + 1 < xs.size(); k += 2) {
        // Cells whose center x lies in [xs[k], xs[k+1]).
        const long lo = static_cast<long>(std::ceil(xs[k] * cells_per_unit - 0.5));
        const long hi = static_cast<long>(std::ceil(xs[k + 1] * cells_per_unit - 0.5));
        if (lo < hi) spans.emplace_back(lo, hi);
      }
    }
    std::sort(spans.begin(), spans.end());
    Spans merged;
    for (const auto& s : spans) {
      if (!merged.empty() && s.first <= merged.back().second) {
        merged.back().second = std::max(merged.back().second, s.second);
      } else {
        merged.push_back(s);
      }
    }
    return merged;
  };

  // Rows with identical spans are stacked into one rectangle per span.
  std::vector<BgMulti> parts;
  auto emit = [&](const Spans& spans, long row0, long row1) {
    for (const auto& [lo, hi] : spans) {
      const Point2 rect[4] = {{lo * cell, row0 * cell},
                              {hi * cell, row0 * cell},
                              {hi * cell, row1 * cell},
                              {lo * cell, row1 * cell}};
      parts.push_back(BgMulti{ToBgPolygon(rect)});
    }
  };
  Spans run;
  long run_start = gy0;
  for (long gy = gy0; gy < gy1; ++gy) {
    Spans spans = row_spans((gy + 0.5) * cell);
    if (spans != run) {
      emit(run, run_start, gy);
      run = std::move(spans);
      run_start = gy;
    }
  }
  emit(run, run_start, gy1);
  if (parts.empty()) return {};
  return FromBg(UnionRange(parts, 0, parts.size()));
}

RegionSet Intersection(const RegionSet& a, const RegionSet& b) {
  BgMulti out;
  bg::intersection(ToBg(a), ToBg(b), out);
  return FromBg(out);
}

double IntersectionArea(const RegionSet& a, const RegionSet& b) {
  if (a.empty() || b.empty()) return 0.0;
  const Aabb ba = BoundsOf(a);
  const Aabb bb = BoundsOf(b);
  if (ba.max_x() < bb.min_x() || bb.max_x() < ba.min_x() ||
      ba.max_y() < bb.min_y() || bb.max_y() < ba.min_y()) {
    return 0.0;
  }
  BgMulti out;
  bg::intersection(ToBg(a), ToBg(b), out);
  return bg::area(out);
}

double RegionIou(const RegionSet& a, const RegionSet& b) {
  const double inter = IntersectionArea(a, b);
  const double uni = Area(a) + Area(b) - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

}  // namespace hts
