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

#include "hts/hierarchy.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "hts/errors.h"
#include "hts/lsdm.h"
#include "hts/text.h"

namespace hts {

namespace {

constexpr double kMatrixTolerance = 1e-6;

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Merge(int a, int b) {
    a = Find(a);
    b = Find(b);
    // Smaller index becomes the root so roots are component minima.
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

Box ClampToCrop(const Box& b, const CropMapping& m) {
  const double w = m.crop_width();
  const double h = m.crop_height();
  Box out{std::clamp(b.x0, 0.0, w), std::clamp(b.y0, 0.0, h),
          std::clamp(b.x1, 0.0, w), std::clamp(b.y1, 0.0, h)};
  if (out.x1 < out.x0) std::swap(out.x0, out.x1);
  if (out.y1 < out.y0) std::swap(out.y0, out.y1);
  return out;
}

Box ScaleBox(const Box& b, double s) {
  return {b.x0 * s, b.y0 * s, b.x1 * s, b.y1 * s};
}

std::string JoinLines(const std::vector<HierLine>& lines) {
  std::string out;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i].text;
  }
  return out;
}

void CollectQuads(const HierWord& word, std::vector<Polygon>& out) {
  if (word.chars.empty()) {
    out.emplace_back(word.quad.begin(), word.quad.end());
    return;
  }
  for (const HierChar& c : word.chars) out.emplace_back(c.quad.begin(), c.quad.end());
}

void CollectQuads(const HierLine& line, std::vector<Polygon>& out) {
  for (const HierWord& w : line.words) CollectQuads(w, out);
}

}  // namespace

AffinityMatrix::AffinityMatrix(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n_ < 0 || values_.size() != static_cast<size_t>(n_) * n_) {
    throw ValidationError("affinity matrix must be " + std::to_string(n_) +
                          "x" + std::to_string(n_) + ", got " +
                          std::to_string(values_.size()) + " values");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const double v = at(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("affinity value outside [0, 1] at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (std::abs(v - at(j, i)) > kMatrixTolerance) {
        throw ValidationError("affinity matrix is not symmetric at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
    if (std::abs(at(i, i) - 1.0) > kMatrixTolerance) {
      throw ValidationError("affinity diagonal must be 1 at " + std::to_string(i));
    }
  }
}

AffinityMatrix AffinityMatrix::Identity(int n) {
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;
  return AffinityMatrix(n, std::move(v));
}

AffinityMatrix AffinityMatrix::Select(std::span<const int> keep) const {
  const int k = static_cast<int>(keep.size());
  std::vector<double> v(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) v[i * k + j] = at(keep[i], keep[j]);
  }
  return AffinityMatrix(k, std::move(v));
}

size_t HierDocument::CountLines() const {
  size_t n = 0;
  for (const auto& p : paragraphs) n += p.lines.size();
  return n;
}

size_t HierDocument::CountWords() const {
  size_t n = 0;
  for (const auto& p : paragraphs)
    for (const auto& l : p.lines) n += l.words.size();
  return n;
}

size_t HierDocument::CountChars() const {
  size_t n = 0;
  for (const auto& p : paragraphs)
    for (const auto& l : p.lines)
      for (const auto& w : l.words) n += w.chars.size();
  return n;
}

void ValidateDocument(const HierDocument& doc) {
  for (size_t pi = 0; pi < doc.paragraphs.size(); ++pi) {
    const HierParagraph& p = doc.paragraphs[pi];
    const std::string where = "paragraph " + std::to_string(pi);
    if (p.lines.empty()) throw ValidationError(where + " has no lines");
    for (size_t li = 0; li < p.lines.size(); ++li) {
      const HierLine& l = p.lines[li];
      const std::string lwhere = where + " line " + std::to_string(li);
      if (l.words.empty()) throw ValidationError(lwhere + " has no words");
      std::string joined;
      for (size_t wi = 0; wi < l.words.size(); ++wi) {
        const HierWord& w = l.words[wi];
        if (w.text.empty()) throw ValidationError(lwhere + " has an empty word");
        if (!w.chars.empty()) {
          std::string spelled;
          for (const HierChar& c : w.chars) spelled += c.text;
          if (spelled != w.text) {
            throw ValidationError(lwhere + " word '" + w.text +
                                  "' does not match its characters '" + spelled + "'");
          }
        }
        if (wi) joined += ' ';
        joined += w.text;
      }
      if (joined != l.text) {
        throw ValidationError(lwhere + " text '" + l.text +
                              "' does not match its words '" + joined + "'");
      }
    }
  }
}

std::vector<std::vector<CharResult>> SplitLine(std::span<const CharResult> chars) {
  std::vector<std::vector<CharResult>> words;
  std::vector<CharResult> current;
  for (const CharResult& c : chars) {
    if (c.symbol == U' ') {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

Box WordBox(std::span<const CharResult> chars) {
  if (chars.empty()) throw DomainError("word box of an empty word");
  Box b = chars.front().box;
  for (const CharResult& c : chars) {
    b.x0 = std::min(b.x0, c.box.x0);
    b.y0 = std::min(b.y0, c.box.y0);
    b.x1 = std::max(b.x1, c.box.x1);
    b.y1 = std::max(b.y1, c.box.y1);
  }
  return b;
}

std::vector<std::vector<int>> GroupParagraphs(const AffinityMatrix& aff,
                                              double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw DomainError("affinity threshold outside [0, 1]");
  }
  const int n = aff.n();
  DisjointSets sets(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (aff.at(i, j) >= threshold) sets.Merge(i, j);
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = sets.Find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

double LineRecognitionConfidence(std::span<const CharResult> chars) {
  if (chars.empty()) return 0.0;
  double log_sum = 0.0;
  for (const CharResult& c : chars) {
    if (c.confidence <= 0.0) return 0.0;
    log_sum += std::log(c.confidence);
  }
  return std::exp(log_sum / chars.size());
}

HierDocument AssembleDocument(const AssemblyInput& input,
                              const AssemblyOptions& options) {
  const size_t n = input.detections.size();
  if (input.recognitions.size() != n || input.mappings.size() != n ||
      static_cast<size_t>(input.affinity.n()) != n) {
    throw DomainError(
        "assembly inputs differ in length: detections=" + std::to_string(n) +
        " recognitions=" + std::to_string(input.recognitions.size()) +
        " mappings=" + std::to_string(input.mappings.size()) +
        " affinity=" + std::to_string(input.affinity.n()));
  }

  std::vector<int> kept;
  for (size_t i = 0; i < n; ++i) {
    if (input.detections[i].confidence() >= options.det_threshold &&
        input.recognitions[i].confidence >= options.rec_threshold) {
      kept.push_back(static_cast<int>(i));
    }
  }
  const AffinityMatrix filtered = input.affinity.Select(kept);

  auto build_line = [&](int idx) {
    const CropMapping& mapping = input.mappings[idx];
    const BezierLinePolygon& poly = input.detections[idx];
    const double scale = mapping.crop_height();
    HierLine line;
    line.confidence = poly.confidence();
    line.control_points = ToGlobalBezier(poly).points();
    const BoundaryPolygon boundary = PolygonBoundary(poly, options.boundary_samples);
    for (const Point2& p : boundary.points) {
      line.vertices.push_back({p.x * input.image_size.width, p.y * input.image_size.height});
    }
    for (const auto& chunk : SplitLine(input.recognitions[idx].chars)) {
      HierWord word;
      for (const CharResult& c : chunk) {
        HierChar hc;
        hc.text = Utf8Encode(c.symbol);
        hc.confidence = c.confidence;
        hc.quad = ProjectBox(mapping, ClampToCrop(ScaleBox(c.box, scale), mapping));
        word.text += hc.text;
        word.chars.push_back(std::move(hc));
      }
      word.quad = ProjectBox(mapping, ClampToCrop(ScaleBox(WordBox(chunk), scale), mapping));
      if (!line.text.empty()) line.text += ' ';
      line.text += word.text;
      line.words.push_back(std::move(word));
    }
    return line;
  };

  HierDocument doc;
  doc.image_size = input.image_size;
  for (const auto& group : GroupParagraphs(filtered, options.affinity_threshold)) {
    HierParagraph para;
    std::vector<Point2> all;
    for (int local : group) {
      HierLine line = build_line(kept[local]);
      if (line.words.empty()) continue;
      all.insert(all.end(), line.vertices.begin(), line.vertices.end());
      para.lines.push_back(std::move(line));
    }
    if (para.lines.empty()) continue;
    para.text = JoinLines(para.lines);
    para.vertices = ConvexHull(all);
    doc.paragraphs.push_back(std::move(para));
  }
  return doc;
}

RegionSet EntityGeometry(const HierWord& word) {
  return CleanPolygon(Polygon(word.quad.begin(), word.quad.end())).region;
}

RegionSet EntityGeometry(const HierLine& line) {
  std::vector<Polygon> quads;
  CollectQuads(line, quads);
  return UnionOf(quads);
}

RegionSet EntityGeometry(const HierParagraph& paragraph) {
  std::vector<Polygon> quads;
  for (const HierLine& l : paragraph.lines) CollectQuads(l, quads);
  return UnionOf(quads);
}

}  // namespace hts
