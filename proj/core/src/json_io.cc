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

#include "hts/json_io.h"

#include <cmath>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "hts/errors.h"
#include "hts/lsdm.h"
#include "hts/text.h"

namespace hts {

namespace {

// Coordinates may sit this far outside the image, as a fraction of its size.
constexpr double kBoundsMargin = 0.1;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

const Json& Field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) Fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where, std::string("missing field '") + key + "'");
  return *it;
}

double Number(const Json& j, const std::string& where) {
  if (!j.is_number()) Fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(where, "non-finite number");
  return v;
}

std::string String(const Json& j, const std::string& where) {
  if (!j.is_string()) Fail(where, "expected a string");
  return j.get<std::string>();
}

double Confidence(const Json& j, const std::string& where) {
  const double v = Number(j, where);
  if (v < 0.0 || v > 1.0) Fail(where, "confidence outside [0, 1]");
  return v;
}

const Json& Array(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array");
  return j;
}

Point2 PointFrom(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) Fail(where, "expected an [x, y] pair");
  return {Number(j[0], where), Number(j[1], where)};
}

std::vector<Point2> PointsFrom(const Json& j, const std::string& where) {
  std::vector<Point2> out;
  for (size_t i = 0; i < Array(j, where).size(); ++i) {
    out.push_back(PointFrom(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json PointsTo(std::span<const Point2> pts) {
  Json out = Json::array();
  for (const Point2& p : pts) out.push_back({p.x, p.y});
  return out;
}

void CheckSchema(const Json& j, const std::string& where) {
  const std::string v = String(Field(j, "schema_version", where), where + ".schema_version");
  if (v != kSchemaVersion) Fail(where, "unsupported schema_version '" + v + "'");
}

ImageSize ImageSizeFrom(const Json& j, const std::string& where) {
  const Json& s = Field(j, "image_size", where);
  if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
      !s[1].is_number_integer()) {
    Fail(where + ".image_size", "expected [width, height] integers");
  }
  const ImageSize size{s[0].get<int>(), s[1].get<int>()};
  if (size.width < 1 || size.height < 1) Fail(where + ".image_size", "must be positive");
  return size;
}

void CheckBounds(std::span<const Point2> pts, double w, double h,
                 const std::string& where) {
  for (const Point2& p : pts) {
    if (p.x < -kBoundsMargin * w || p.x > (1 + kBoundsMargin) * w ||
        p.y < -kBoundsMargin * h || p.y > (1 + kBoundsMargin) * h) {
      Fail(where, "coordinate (" + std::to_string(p.x) + ", " +
                      std::to_string(p.y) + ") outside the image bounds");
    }
  }
}

std::optional<std::string> ImageRef(const Json& j) {
  auto it = j.find("image_ref");
  if (it == j.end() || it->is_null()) return std::nullopt;
  return String(*it, "image_ref");
}

Box BoxFrom(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) Fail(where, "expected [x0, y0, x1, y1]");
  Box b{Number(j[0], where), Number(j[1], where), Number(j[2], where),
        Number(j[3], where)};
  if (!b.IsOrdered()) Fail(where, "box corners out of order");
  return b;
}

Json QuadTo(const Quad& q) { return PointsTo(q); }

Quad QuadFrom(const Json& j, const std::string& where) {
  const std::vector<Point2> pts = PointsFrom(j, where);
  if (pts.size() != 4) Fail(where, "expected 4 vertices");
  return {pts[0], pts[1], pts[2], pts[3]};
}

bool OptionalBool(const Json& j, const char* key) {
  auto it = j.find(key);
  return it != j.end() && it->is_boolean() && it->get<bool>();
}

}  // namespace

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const Json& json, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << json.dump(1) << "\n";
  if (!out) throw IoError("failed writing " + path.string());
}

Json ToJson(const DetectionsDocument& doc) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "detections";
  if (doc.image_ref) j["image_ref"] = *doc.image_ref;
  j["image_size"] = {doc.image_size.width, doc.image_size.height};
  Json det;
  det["bezier_order"] = doc.bezier_order;
  det["control_points"] = Json::array();
  det["confidences"] = Json::array();
  for (const BezierLinePolygon& line : doc.lines) {
    det["control_points"].push_back(PointsTo(ToGlobalBezier(line).points()));
    det["confidences"].push_back(line.confidence());
  }
  det["affinity"] = Json::array();
  for (int i = 0; i < doc.affinity.n(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < doc.affinity.n(); ++k) row.push_back(doc.affinity.at(i, k));
    det["affinity"].push_back(std::move(row));
  }
  j["detections"] = std::move(det);
  j["recognitions"] = Json::array();
  for (const RecognitionRecord& rec : doc.recognitions) {
    Json r;
    r["chars"] = Json::array();
    for (const CharResult& c : rec.chars) {
      r["chars"].push_back({{"symbol", Utf8Encode(c.symbol)},
                            {"box", {c.box.x0, c.box.y0, c.box.x1, c.box.y1}},
                            {"confidence", c.confidence}});
    }
    if (rec.confidence) r["confidence"] = *rec.confidence;
    if (rec.crop_width) r["crop_width"] = *rec.crop_width;
    r["crop_height"] = rec.crop_height;
    j["recognitions"].push_back(std::move(r));
  }
  return j;
}

DetectionsDocument DetectionsFromJson(const Json& j) {
  const std::string root = "detections document";
  CheckSchema(j, root);
  DetectionsDocument doc;
  doc.image_ref = ImageRef(j);
  doc.image_size = ImageSizeFrom(j, root);
  const Json& det = Field(j, "detections", root);
  if (auto it = det.find("bezier_order"); it != det.end()) {
    if (!it->is_number_integer() || it->get<int>() < 1) {
      Fail("detections.bezier_order", "expected a positive integer");
    }
    doc.bezier_order = it->get<int>();
  }
  const size_t expected_points = 2 * (doc.bezier_order + 1);
  const Json& cps = Array(Field(det, "control_points", "detections"), "detections.control_points");
  const Json& confs = Array(Field(det, "confidences", "detections"), "detections.confidences");
  if (cps.size() != confs.size()) {
    Fail("detections", "control_points has " + std::to_string(cps.size()) +
                           " lines but confidences has " + std::to_string(confs.size()));
  }
  for (size_t i = 0; i < cps.size(); ++i) {
    const std::string where = "detections.control_points[" + std::to_string(i) + "]";
    std::vector<Point2> pts = PointsFrom(cps[i], where);
    if (pts.size() != expected_points) {
      Fail(where, "expected " + std::to_string(expected_points) +
                      " control points for order " + std::to_string(doc.bezier_order) +
                      ", got " + std::to_string(pts.size()));
    }
    CheckBounds(pts, 1.0, 1.0, where);
    const double conf = Confidence(confs[i], "detections.confidences[" + std::to_string(i) + "]");
    doc.lines.push_back(ToLinePolygon(GlobalBezier(std::move(pts)), conf));
  }

  const Json& aff = Array(Field(det, "affinity", "detections"), "detections.affinity");
  const int n = static_cast<int>(aff.size());
  std::vector<double> values;
  for (int r = 0; r < n; ++r) {
    const std::string where = "detections.affinity[" + std::to_string(r) + "]";
    if (!aff[r].is_array() || static_cast<int>(aff[r].size()) != n) {
      Fail(where, "affinity matrix must be square");
    }
    for (const Json& v : aff[r]) values.push_back(Number(v, where));
  }
  doc.affinity = AffinityMatrix(n, std::move(values));

  if (auto it = j.find("recognitions"); it != j.end()) {
    const Json& recs = Array(*it, "recognitions");
    for (size_t i = 0; i < recs.size(); ++i) {
      const std::string where = "recognitions[" + std::to_string(i) + "]";
      RecognitionRecord rec;
      const Json& chars = Array(Field(recs[i], "chars", where), where + ".chars");
      for (size_t k = 0; k < chars.size(); ++k) {
        const std::string cw = where + ".chars[" + std::to_string(k) + "]";
        const std::u32string sym = Utf8Decode(String(Field(chars[k], "symbol", cw), cw));
        if (sym.size() != 1) Fail(cw, "symbol must be a single character");
        CharResult c;
        c.symbol = sym[0];
        c.box = BoxFrom(Field(chars[k], "box", cw), cw + ".box");
        c.confidence = Confidence(Field(chars[k], "confidence", cw), cw + ".confidence");
        rec.chars.push_back(c);
      }
      if (auto c = recs[i].find("confidence"); c != recs[i].end()) {
        rec.confidence = Confidence(*c, where + ".confidence");
      }
      if (auto c = recs[i].find("crop_width"); c != recs[i].end()) {
        if (!c->is_number_integer() || c->get<int>() < 1) Fail(where, "crop_width must be >= 1");
        rec.crop_width = c->get<int>();
      }
      if (auto c = recs[i].find("crop_height"); c != recs[i].end()) {
        if (!c->is_number_integer() || c->get<int>() < 1) Fail(where, "crop_height must be >= 1");
        rec.crop_height = c->get<int>();
      }
      doc.recognitions.push_back(std::move(rec));
    }
  }
  return doc;
}

Json ToJson(const HierDocument& doc, const std::string& kind,
            const std::optional<std::string>& image_ref) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  if (image_ref) j["image_ref"] = *image_ref;
  j["image_size"] = {doc.image_size.width, doc.image_size.height};
  j["paragraphs"] = Json::array();
  for (const HierParagraph& p : doc.paragraphs) {
    Json pj;
    pj["text"] = p.text;
    pj["vertices"] = PointsTo(p.vertices);
    pj["lines"] = Json::array();
    for (const HierLine& l : p.lines) {
      Json lj;
      lj["text"] = l.text;
      lj["vertices"] = PointsTo(l.vertices);
      if (!l.control_points.empty()) lj["control_points"] = PointsTo(l.control_points);
      lj["confidence"] = l.confidence;
      lj["words"] = Json::array();
      for (const HierWord& w : l.words) {
        Json wj;
        wj["text"] = w.text;
        wj["vertices"] = QuadTo(w.quad);
        if (w.do_not_care) wj["do_not_care"] = true;
        wj["chars"] = Json::array();
        for (const HierChar& c : w.chars) {
          wj["chars"].push_back({{"text", c.text},
                                 {"vertices", QuadTo(c.quad)},
                                 {"confidence", c.confidence}});
        }
        lj["words"].push_back(std::move(wj));
      }
      pj["lines"].push_back(std::move(lj));
    }
    j["paragraphs"].push_back(std::move(pj));
  }
  return j;
}

HierDocument HierDocumentFromJson(const Json& j) {
  const std::string root = "hierarchy document";
  CheckSchema(j, root);
  if (auto k = j.find("kind"); k != j.end()) {
    const std::string kind = String(*k, "kind");
    if (kind != "hierarchy" && kind != "ground_truth") {
      Fail(root, "expected kind 'hierarchy' or 'ground_truth', got '" + kind + "'");
    }
  }
  HierDocument doc;
  doc.image_size = ImageSizeFrom(j, root);
  const double w = doc.image_size.width;
  const double h = doc.image_size.height;
  const Json& paras = Array(Field(j, "paragraphs", root), "paragraphs");
  for (size_t pi = 0; pi < paras.size(); ++pi) {
    const std::string pw = "paragraphs[" + std::to_string(pi) + "]";
    HierParagraph p;
    p.text = String(Field(paras[pi], "text", pw), pw + ".text");
    p.vertices = PointsFrom(Field(paras[pi], "vertices", pw), pw + ".vertices");
    CheckBounds(p.vertices, w, h, pw + ".vertices");
    const Json& lines = Array(Field(paras[pi], "lines", pw), pw + ".lines");
    for (size_t li = 0; li < lines.size(); ++li) {
      const std::string lw = pw + ".lines[" + std::to_string(li) + "]";
      HierLine l;
      l.text = String(Field(lines[li], "text", lw), lw + ".text");
      l.vertices = PointsFrom(Field(lines[li], "vertices", lw), lw + ".vertices");
      CheckBounds(l.vertices, w, h, lw + ".vertices");
      if (auto c = lines[li].find("control_points"); c != lines[li].end()) {
        l.control_points = PointsFrom(*c, lw + ".control_points");
        if (l.control_points.size() < 4 || l.control_points.size() % 2 != 0) {
          Fail(lw + ".control_points", "expected 2(m+1) points");
        }
        CheckBounds(l.control_points, 1.0, 1.0, lw + ".control_points");
      }
      if (auto c = lines[li].find("confidence"); c != lines[li].end()) {
        l.confidence = Confidence(*c, lw + ".confidence");
      }
      const Json& words = Array(Field(lines[li], "words", lw), lw + ".words");
      for (size_t wi = 0; wi < words.size(); ++wi) {
        const std::string ww = lw + ".words[" + std::to_string(wi) + "]";
        HierWord word;
        word.text = String(Field(words[wi], "text", ww), ww + ".text");
        word.quad = QuadFrom(Field(words[wi], "vertices", ww), ww + ".vertices");
        CheckBounds(word.quad, w, h, ww + ".vertices");
        word.do_not_care = OptionalBool(words[wi], "do_not_care");
        if (auto cs = words[wi].find("chars"); cs != words[wi].end()) {
          for (size_t ci = 0; ci < Array(*cs, ww + ".chars").size(); ++ci) {
            const std::string cw = ww + ".chars[" + std::to_string(ci) + "]";
            const Json& cj = (*cs)[ci];
            HierChar c;
            c.text = String(Field(cj, "text", cw), cw + ".text");
            c.quad = QuadFrom(Field(cj, "vertices", cw), cw + ".vertices");
            CheckBounds(c.quad, w, h, cw + ".vertices");
            if (auto cc = cj.find("confidence"); cc != cj.end()) {
              c.confidence = Confidence(*cc, cw + ".confidence");
            }
            word.chars.push_back(std::move(c));
          }
        }
        l.words.push_back(std::move(word));
      }
      p.lines.push_back(std::move(l));
    }
    doc.paragraphs.push_back(std::move(p));
  }
  ValidateDocument(doc);
  return doc;
}

Json ToJson(const EvalReport& report, const ReportMeta& meta) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "report";
  j["protocol"] = meta.protocol;
  j["level"] = meta.level;
  j["recognition"] = meta.recognition;
  j["documents"] = meta.documents;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f1"] = report.f1;
  if (report.tightness) j["tightness"] = *report.tightness;
  if (report.pq) j["pq"] = *report.pq;
  j["tp"] = report.counts.tp;
  j["fp"] = report.counts.fp;
  j["fn"] = report.counts.fn;
  return j;
}

}  // namespace hts
