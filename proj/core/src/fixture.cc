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

#include "hts/fixture.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "hts/bezier.h"
#include "hts/errors.h"
#include "hts/lsdm.h"
#include "hts/polygon.h"
#include "hts/rectify.h"
#include "hts/text.h"

namespace hts {

namespace {

constexpr double kMarginFraction = 0.04;
constexpr int kBaselineSamples = 32;
constexpr float kPaper = 1.0f;
constexpr float kInk = 0.1f;
constexpr uint64_t kNoiseStream = 0x9e3779b97f4a7c15ULL;

constexpr char kLetters[] =
    "abcdefghijklmnopqrstuvwxyzabcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr char kDigits[] = "0123456789";
constexpr char kTrailing[] = ".,;:!?)";

// mt19937_64 has a fully specified output sequence; the conversions below
// avoid the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  double Uniform() { return (engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  int Int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<uint64_t>(hi - lo + 1));
  }
  int Int(IntRange r) { return Int(r.min, r.max); }

 private:
  std::mt19937_64 engine_;
};

struct GlyphPlan {
  char symbol;
  double width;  // in units of line height
};

struct LinePlan {
  std::vector<std::vector<GlyphPlan>> words;
  double height = 0;
  double x0 = 0;
  double y0 = 0;
  double length = 0;  // pixels
  double phase = 0;
  double frequency = 0;
};

constexpr double kPadding = 0.2;    // line ends, in line heights
constexpr double kCharGap = 0.08;
constexpr double kSpaceGap = 0.45;

double LineLength(const std::vector<std::vector<GlyphPlan>>& words) {
  double units = 2 * kPadding;
  for (size_t w = 0; w < words.size(); ++w) {
    if (w) units += kSpaceGap;
    for (size_t c = 0; c < words[w].size(); ++c) {
      if (c) units += kCharGap;
      units += words[w][c].width;
    }
  }
  return units;
}

std::vector<GlyphPlan> PlanWord(Rng& rng, const FixtureSpec& spec) {
  std::vector<GlyphPlan> word;
  const int n = rng.Int(spec.chars_per_word);
  const bool numeric = rng.Uniform() < 0.1;
  for (int i = 0; i < n; ++i) {
    const char c = numeric ? kDigits[rng.Int(0, 9)]
                           : kLetters[rng.Int(0, sizeof(kLetters) - 2)];
    word.push_back({c, rng.Uniform(0.45, 0.7)});
  }
  if (rng.Uniform() < 0.15) {
    word.push_back({kTrailing[rng.Int(0, sizeof(kTrailing) - 2)], 0.25});
  }
  return word;
}

struct Layout {
  std::vector<std::vector<LinePlan>> paragraphs;
};

bool TryLayout(Rng& rng, const FixtureSpec& spec, Layout& out) {
  const double w = spec.image_size.width;
  const double h = spec.image_size.height;
  const double margin = kMarginFraction * std::min(w, h);
  const double usable = w - 2 * margin;
  double cursor = margin + rng.Uniform(0.0, margin);
  out.paragraphs.clear();
  const int n_para = rng.Int(spec.paragraphs);
  for (int p = 0; p < n_para; ++p) {
    const double lh = rng.Int(spec.line_height_px);
    const double amp = spec.curvature * lh;
    const double pitch = lh + 2 * amp + 0.5 * lh;
    const int n_lines = rng.Int(spec.lines_per_paragraph);
    std::vector<LinePlan> lines;
    double widest = 0;
    for (int l = 0; l < n_lines; ++l) {
      LinePlan line;
      line.height = lh;
      const int n_words = rng.Int(spec.words_per_line);
      for (int k = 0; k < n_words; ++k) line.words.push_back(PlanWord(rng, spec));
      while (line.words.size() > 1 && LineLength(line.words) * lh > usable) {
        line.words.pop_back();
      }
      line.length = LineLength(line.words) * lh;
      if (line.length > usable) return false;
      line.phase = rng.Uniform(0.0, 2 * std::numbers::pi);
      line.frequency = rng.Uniform(0.25, 0.75);
      widest = std::max(widest, line.length);
      lines.push_back(std::move(line));
    }
    const double left = margin + rng.Uniform(0.0, usable - widest);
    for (LinePlan& line : lines) {
      line.x0 = left + rng.Uniform(0.0, 0.5 * (widest - line.length));
      line.y0 = cursor;
      cursor += pitch;
    }
    cursor += lh * rng.Uniform(1.0, 2.0);
    if (cursor - lh * 0.5 > h - margin) return false;
    out.paragraphs.push_back(std::move(lines));
  }
  return true;
}

// Top curve in pixels; y0 is the top of the line's band.
BezierCurve TopCurvePx(const LinePlan& line, double curvature) {
  const double amp = curvature * line.height;
  std::vector<Point2> pts;
  for (int k = 0; k < kBaselineSamples; ++k) {
    const double s = static_cast<double>(k) / (kBaselineSamples - 1);
    pts.push_back({line.x0 + s * line.length,
                   line.y0 + amp +
                       amp * std::sin(2 * std::numbers::pi * line.frequency * s + line.phase)});
  }
  return FitBezier(pts, kDefaultBezierOrder).curve;
}

BezierLinePolygon LinePolygon(const LinePlan& line, double curvature,
                              ImageSize size) {
  const BezierCurve top_px = TopCurvePx(line, curvature);
  std::vector<Point2> top, bottom;
  for (const Point2& p : top_px.control_points()) {
    top.push_back({p.x / size.width, p.y / size.height});
    bottom.push_back({p.x / size.width, (p.y + line.height) / size.height});
  }
  return BezierLinePolygon(BezierCurve(std::move(top)), BezierCurve(std::move(bottom)), 1.0);
}

// Pixel coverage is estimated on a kCoverageSamples^2 grid, so glyph edges
// are anti-aliased rather than snapped to pixel centers.
constexpr int kCoverageSamples = 4;

void FillQuad(GrayImage& img, const Quad& q, float value) {
  const Aabb b = BoundsOf(q);
  const int x0 = std::max(0, static_cast<int>(std::floor(b.min_x())));
  const int x1 = std::min(img.width() - 1, static_cast<int>(std::ceil(b.max_x())));
  const int y0 = std::max(0, static_cast<int>(std::floor(b.min_y())));
  const int y1 = std::min(img.height() - 1, static_cast<int>(std::ceil(b.max_y())));
  constexpr double kStep = 1.0 / kCoverageSamples;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      int hits = 0;
      for (int sy = 0; sy < kCoverageSamples; ++sy) {
        for (int sx = 0; sx < kCoverageSamples; ++sx) {
          hits += PointInPolygon(q, {x + (sx + 0.5) * kStep, y + (sy + 0.5) * kStep});
        }
      }
      if (hits == 0) continue;
      const float cover = static_cast<float>(hits) / (kCoverageSamples * kCoverageSamples);
      img.at(x, y) = std::min(img.at(x, y), kPaper - (kPaper - value) * cover);
    }
  }
}

Box Normalize(const Box& b, double crop_height) {
  return {b.x0 / crop_height, b.y0 / crop_height, b.x1 / crop_height, b.y1 / crop_height};
}

bool BoundsOverlap(const Aabb& a, const Aabb& b) {
  return a.min_x() < b.max_x() && b.min_x() < a.max_x() && a.min_y() < b.max_y() &&
         b.min_y() < a.max_y();
}

}  // namespace

void FixtureSpec::Validate() const {
  for (const IntRange& r : {paragraphs, lines_per_paragraph, words_per_line,
                            chars_per_word, line_height_px}) {
    if (r.min < 1 || r.max < r.min) throw DomainError("fixture range is empty or non-positive");
  }
  if (!(curvature >= 0.0)) throw DomainError("fixture curvature must be >= 0");
  if (image_size.width < 16 || image_size.height < 16) {
    throw DomainError("fixture image must be at least 16x16");
  }
  if (!(confidence_noise >= 0.0 && confidence_noise <= 1.0)) {
    throw DomainError("confidence noise must be in [0, 1]");
  }
  if (!(box_jitter_px >= 0.0)) throw DomainError("box jitter must be >= 0");
  if (crop_height < 1) throw DomainError("crop height must be >= 1");
}

Fixture GenerateFixture(const FixtureSpec& spec) {
  spec.Validate();
  Rng rng(spec.seed);
  Layout layout;
  std::vector<BezierLinePolygon> polygons;
  std::vector<Aabb> bounds;
  bool ok = false;
  for (int attempt = 0; attempt < kMaxLayoutAttempts && !ok; ++attempt) {
    if (!TryLayout(rng, spec, layout)) continue;
    polygons.clear();
    bounds.clear();
    ok = true;
    for (const auto& para : layout.paragraphs) {
      for (const LinePlan& line : para) {
        polygons.push_back(LinePolygon(line, spec.curvature, spec.image_size));
        const BoundaryPolygon b = PolygonBoundary(polygons.back());
        Aabb box = BoundsOf(b.points);
        box.w *= spec.image_size.width;
        box.h *= spec.image_size.height;
        box.x_center *= spec.image_size.width;
        box.y_center *= spec.image_size.height;
        for (const Aabb& other : bounds) ok = ok && !BoundsOverlap(box, other);
        ok = ok && !b.self_intersecting && !b.degenerate;
        bounds.push_back(box);
      }
    }
  }
  if (!ok) {
    throw DomainError("no non-overlapping fixture layout after " +
                      std::to_string(kMaxLayoutAttempts) + " attempts");
  }

  Rng noise(spec.seed ^ kNoiseStream);
  Fixture fx;
  fx.image = GrayImage(spec.image_size.width, spec.image_size.height, kPaper);
  fx.ground_truth.image_size = spec.image_size;
  fx.perfect.image_size = fx.noisy.image_size = spec.image_size;

  const double ch = spec.crop_height;
  int line_index = 0;
  for (const auto& para : layout.paragraphs) {
    HierParagraph gt_para;
    std::vector<int> members;
    std::vector<Point2> hull_points;
    for (const LinePlan& plan : para) {
      const BezierLinePolygon& poly = polygons[line_index];
      const int crop_width = ComputeCropWidth(poly, spec.image_size, spec.crop_height);
      const CropMapping mapping(poly, crop_width, spec.crop_height, spec.image_size);
      // Layout units (line heights) to crop pixels.
      const double scale = crop_width / (plan.length / plan.height);

      HierLine gt_line;
      gt_line.control_points = ToGlobalBezier(poly).points();
      for (const Point2& p : PolygonBoundary(poly).points) {
        gt_line.vertices.push_back({p.x * spec.image_size.width, p.y * spec.image_size.height});
      }
      hull_points.insert(hull_points.end(), gt_line.vertices.begin(), gt_line.vertices.end());

      RecognitionRecord perfect_rec, noisy_rec;
      perfect_rec.crop_width = noisy_rec.crop_width = crop_width;
      perfect_rec.crop_height = noisy_rec.crop_height = spec.crop_height;
      double u = kPadding;
      for (size_t wi = 0; wi < plan.words.size(); ++wi) {
        if (wi) {
          CharResult space;
          space.box = Normalize({u * scale, 0.3 * ch, (u + kSpaceGap) * scale, 0.7 * ch}, ch);
          perfect_rec.chars.push_back(space);
          noisy_rec.chars.push_back(space);
          u += kSpaceGap;
        }
        HierWord gt_word;
        std::vector<CharResult> word_chars;
        for (size_t ci = 0; ci < plan.words[wi].size(); ++ci) {
          if (ci) u += kCharGap;
          const GlyphPlan& g = plan.words[wi][ci];
          const bool low = g.symbol >= 'a' && g.symbol <= 'z';
          const Box crop_box{u * scale, (low ? 0.3 : 0.12) * ch, (u + g.width) * scale, 0.88 * ch};
          u += g.width;

          CharResult c;
          c.symbol = static_cast<char32_t>(g.symbol);
          c.box = Normalize(crop_box, ch);
          word_chars.push_back(c);
          perfect_rec.chars.push_back(c);

          CharResult nc = c;
          const double j = spec.box_jitter_px * ch / plan.height;
          Box jb{crop_box.x0 + j * noise.Uniform(-1, 1), crop_box.y0 + j * noise.Uniform(-1, 1),
                 crop_box.x1 + j * noise.Uniform(-1, 1), crop_box.y1 + j * noise.Uniform(-1, 1)};
          if (jb.x1 < jb.x0) std::swap(jb.x0, jb.x1);
          if (jb.y1 < jb.y0) std::swap(jb.y0, jb.y1);
          nc.box = Normalize(jb, ch);
          nc.confidence = 1.0 - 0.5 * spec.confidence_noise * noise.Uniform();
          noisy_rec.chars.push_back(nc);

          HierChar hc;
          hc.text = Utf8Encode(c.symbol);
          hc.quad = ProjectBox(mapping, crop_box);
          FillQuad(fx.image, hc.quad, kInk);
          gt_word.text += hc.text;
          gt_word.chars.push_back(std::move(hc));
        }
        const Box wb = WordBox(word_chars);
        gt_word.quad = ProjectBox(mapping, {wb.x0 * ch, wb.y0 * ch, wb.x1 * ch, wb.y1 * ch});
        if (!gt_line.text.empty()) gt_line.text += ' ';
        gt_line.text += gt_word.text;
        gt_line.words.push_back(std::move(gt_word));
      }

      fx.perfect.lines.push_back(poly);
      fx.noisy.lines.push_back(BezierLinePolygon(
          poly.top(), poly.bottom(), 1.0 - spec.confidence_noise * noise.Uniform()));
      fx.perfect.recognitions.push_back(std::move(perfect_rec));
      fx.noisy.recognitions.push_back(std::move(noisy_rec));
      members.push_back(line_index);
      gt_para.lines.push_back(std::move(gt_line));
      ++line_index;
    }
    for (size_t i = 0; i < gt_para.lines.size(); ++i) {
      if (i) gt_para.text += '\n';
      gt_para.text += gt_para.lines[i].text;
    }
    gt_para.vertices = ConvexHull(hull_points);
    fx.ground_truth.paragraphs.push_back(std::move(gt_para));
    fx.paragraph_lines.push_back(std::move(members));
  }

  const int n = line_index;
  std::vector<int> owner(n);
  for (size_t p = 0; p < fx.paragraph_lines.size(); ++p)
    for (int i : fx.paragraph_lines[p]) owner[i] = static_cast<int>(p);
  std::vector<double> exact(static_cast<size_t>(n) * n), noisy(exact.size());
  for (int i = 0; i < n; ++i) {
    for (int k = i; k < n; ++k) {
      const bool same = owner[i] == owner[k];
      const double draw = noise.Uniform();
      exact[i * n + k] = exact[k * n + i] = same ? 1.0 : 0.0;
      const double v = i == k ? 1.0
                              : (same ? 1.0 - 0.4 * spec.confidence_noise * draw
                                      : 0.4 * spec.confidence_noise * draw);
      noisy[i * n + k] = noisy[k * n + i] = v;
    }
  }
  fx.perfect.affinity = AffinityMatrix(n, std::move(exact));
  fx.noisy.affinity = AffinityMatrix(n, std::move(noisy));
  return fx;
}

}  // namespace hts
