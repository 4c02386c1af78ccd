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

#include "hts/svg.h"

#include <fstream>
#include <span>
#include <sstream>

#include "hts/errors.h"

namespace hts {

namespace {

constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

void EmitPolygon(std::ostream& out, std::span<const Point2> pts,
                 const char* cls, const std::string& style) {
  out << "  <polygon class=\"" << cls << "\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ' ';
    out << pts[i].x << ',' << pts[i].y;
  }
  out << "\" " << style << "/>\n";
}

}  // namespace

std::string RenderSvg(const HierDocument& doc) {
  std::ostringstream out;
  out.precision(6);
  const int w = doc.image_size.width;
  const int h = doc.image_size.height;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
      << "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" << w
      << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";

  for (size_t pi = 0; pi < doc.paragraphs.size(); ++pi) {
    const std::string color = kPalette[pi % kPaletteSize];
    const std::string fill = "fill=\"" + color + "\" fill-opacity=\"0.6\" stroke=\"none\"";
    for (const HierLine& l : doc.paragraphs[pi].lines)
      for (const HierWord& wd : l.words)
        for (const HierChar& c : wd.chars) EmitPolygon(out, c.quad, "char", fill);
  }
  for (size_t pi = 0; pi < doc.paragraphs.size(); ++pi) {
    const std::string color = kPalette[pi % kPaletteSize];
    const HierParagraph& p = doc.paragraphs[pi];
    for (const HierLine& l : p.lines) {
      for (const HierWord& wd : l.words) {
        EmitPolygon(out, wd.quad, "word",
                    "fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1\"");
      }
    }
    for (const HierLine& l : p.lines) {
      EmitPolygon(out, l.vertices, "line",
                  "fill=\"none\" stroke=\"" + color +
                      "\" stroke-width=\"1.5\" stroke-dasharray=\"4 2\"");
    }
    EmitPolygon(out, p.vertices, "paragraph",
                "fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2.5\"");
  }
  out << "</svg>\n";
  return out.str();
}

void WriteSvg(const HierDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << RenderSvg(doc);
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace hts
