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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "hts/bezier.h"
#include "hts/document.h"
#include "hts/errors.h"
#include "hts/eval.h"
#include "hts/fixture.h"
#include "hts/hierarchy.h"
#include "hts/image.h"
#include "hts/json_io.h"
#include "hts/rectify.h"
#include "hts/svg.h"
#include "worker_pool.h"

namespace hts::tools {

namespace fs = std::filesystem;

namespace {

std::shared_ptr<spdlog::logger> Logger() {
  static std::shared_ptr<spdlog::logger> logger = [] {
    auto l = std::make_shared<spdlog::logger>(
        "hts_geom", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    l->set_pattern("hts_geom: %l: %v");
    return l;
  }();
  return logger;
}

// HTS_GEOM_LOG is one of off, warn, info, debug; unset means warn.
void ConfigureLogging() {
  const char* env = std::getenv("HTS_GEOM_LOG");
  const std::string level = env ? env : "warn";
  if (level == "off") {
    Logger()->set_level(spdlog::level::off);
  } else if (level == "info") {
    Logger()->set_level(spdlog::level::info);
  } else if (level == "debug") {
    Logger()->set_level(spdlog::level::debug);
  } else {
    Logger()->set_level(spdlog::level::warn);
  }
}

// Files named directly plus the *.json files of named directories, sorted.
std::vector<fs::path> ExpandInputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const std::string& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else if (fs::exists(p)) {
      out.push_back(p);
    } else {
      throw IoError("no such file or directory: " + in);
    }
  }
  return out;
}

void EnsureDirectory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create directory " + dir.string());
  }
}

// Output target for n inputs: a single .json file, or a directory that
// receives one file per input under the input's name.
struct OutputTarget {
  fs::path path;
  bool directory = true;

  fs::path For(const fs::path& input) const {
    return directory ? path / input.filename() : path;
  }
};

OutputTarget ResolveOutput(const std::string& out, size_t n_inputs) {
  OutputTarget t{fs::path(out), true};
  if (n_inputs == 1 && !fs::is_directory(t.path) && t.path.extension() == ".json") {
    t.directory = false;
    if (t.path.has_parent_path()) EnsureDirectory(t.path.parent_path());
  } else {
    EnsureDirectory(t.path);
  }
  return t;
}

void WriteText(const std::string& text, const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw IoError("cannot write " + path.string());
}

IntRange ParseRange(const std::string& text) {
  IntRange r;
  const size_t colon = text.find(':');
  try {
    r.min = std::stoi(text.substr(0, colon));
    r.max = colon == std::string::npos ? r.min : std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw DomainError("expected MIN:MAX, got '" + text + "'");
  }
  return r;
}

std::vector<std::string> ReadLexicon(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read lexicon " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(f, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) words.push_back(line);
  }
  if (words.empty()) throw ValidationError("lexicon " + path.string() + " is empty");
  return words;
}

// ---------------------------------------------------------------- assemble

struct AssembleArgs {
  std::vector<std::string> inputs;
  std::string out;
  AssemblyOptions options;
  int max_crop_width = kDefaultMaxCropWidth;
  int jobs = DefaultJobs();
};

int RunAssemble(const AssembleArgs& a) {
  const std::vector<fs::path> inputs = ExpandInputs(a.inputs);
  if (inputs.empty()) throw ValidationError("assemble: no input documents");
  const OutputTarget target = ResolveOutput(a.out, inputs.size());
  ParallelFor(inputs.size(), a.jobs, [&](size_t i) {
    Logger()->debug("assemble {}", inputs[i].string());
    const DetectionsDocument det = DetectionsFromJson(ReadJsonFile(inputs[i]));
    try {
      const HierDocument doc =
          AssembleDocument(ToAssemblyInput(det, a.max_crop_width), a.options);
      WriteJsonFile(ToJson(doc, "hierarchy", det.image_ref), target.For(inputs[i]));
    } catch (const DomainError& e) {
      throw DomainError(inputs[i].string() + ": " + e.what());
    }
  });
  Logger()->info("assembled {} document(s)", inputs.size());
  return kExitOk;
}

// ----------------------------------------------------------------- rectify

struct RectifyArgs {
  std::string image;
  std::string detections;
  std::string out;
  int crop_height = kDefaultCropHeight;
  int max_width = kDefaultMaxCropWidth;
};

int RunRectify(const RectifyArgs& a) {
  const GrayImage image = ReadImage(a.image);
  const DetectionsDocument det = DetectionsFromJson(ReadJsonFile(a.detections));
  if (image.size() != det.image_size) {
    throw ValidationError(fmt::format("image is {}x{} but detections declare {}x{}",
                                      image.width(), image.height(), det.image_size.width,
                                      det.image_size.height));
  }
  EnsureDirectory(a.out);
  Json crops = Json::array();
  for (size_t i = 0; i < det.lines.size(); ++i) {
    const RectifiedCrop crop = CropRectify(image, det.lines[i], a.crop_height, a.max_width);
    const std::string name = fmt::format("line_{:04d}.pgm", i);
    WritePgm(crop.image, fs::path(a.out) / name);
    Json cps = Json::array();
    for (const BezierCurve* c : {&det.lines[i].top(), &det.lines[i].bottom()}) {
      for (const Point2& p : c->control_points()) cps.push_back({p.x, p.y});
    }
    crops.push_back({{"index", i},
                     {"file", name},
                     {"crop_width", crop.mapping.crop_width()},
                     {"crop_height", crop.mapping.crop_height()},
                     {"control_points", cps}});
  }
  Json mapping = {{"schema_version", kSchemaVersion},
                  {"kind", "crops"},
                  {"image_ref", a.image},
                  {"image_size", {det.image_size.width, det.image_size.height}},
                  {"crops", crops}};
  WriteJsonFile(mapping, fs::path(a.out) / "mapping.json");
  Logger()->info("wrote {} crop(s) to {}", det.lines.size(), a.out);
  return kExitOk;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string pred;
  std::string gt;
  std::string protocol = "hiertext";
  std::string level = "word";
  std::string mode = "end-to-end";
  std::string geometry = "polygon";
  std::string lexicon;
  bool no_recognition = false;
  double iou = kDefaultMatchIou;
  std::string format = "json";
  std::string out;
  int jobs = DefaultJobs();
};

HierLevel ParseLevel(const std::string& s) {
  if (s == "word") return HierLevel::kWord;
  if (s == "line") return HierLevel::kLine;
  return HierLevel::kParagraph;
}

struct DocPair {
  std::string name;
  std::optional<fs::path> pred;  // absent: no prediction file, all misses
  fs::path gt;
};

std::vector<DocPair> PairDocuments(const fs::path& pred, const fs::path& gt) {
  if (!fs::exists(pred)) throw IoError("no such file or directory: " + pred.string());
  if (!fs::exists(gt)) throw IoError("no such file or directory: " + gt.string());
  const bool pd = fs::is_directory(pred);
  if (pd != fs::is_directory(gt)) {
    throw ValidationError("evaluate: pred and gt must both be files or both directories");
  }
  if (!pd) return {{gt.filename().string(), pred, gt}};
  std::vector<DocPair> pairs;
  for (const fs::path& g : ExpandInputs({gt.string()})) {
    DocPair p{g.filename().string(), std::nullopt, g};
    if (fs::exists(pred / g.filename())) {
      p.pred = pred / g.filename();
    } else {
      Logger()->warn("no prediction for {}; scoring it as empty", p.name);
    }
    pairs.push_back(std::move(p));
  }
  for (const fs::path& p : ExpandInputs({pred.string()})) {
    if (!fs::exists(gt / p.filename())) {
      Logger()->warn("prediction {} has no ground truth; ignored", p.filename().string());
    }
  }
  if (pairs.empty()) throw ValidationError("evaluate: no ground-truth documents");
  return pairs;
}

std::string FormatTable(const EvalReport& r, const ReportMeta& meta) {
  std::ostringstream s;
  s << fmt::format("protocol    {}\n", meta.protocol)
    << fmt::format("level       {}\n", meta.level)
    << fmt::format("recognition {}\n", meta.recognition ? "yes" : "no")
    << fmt::format("documents   {}\n", meta.documents)
    << fmt::format("tp/fp/fn    {}/{}/{}\n", r.counts.tp, r.counts.fp, r.counts.fn)
    << fmt::format("precision   {:.6f}\n", r.precision)
    << fmt::format("recall      {:.6f}\n", r.recall)
    << fmt::format("f1          {:.6f}\n", r.f1);
  if (r.tightness) s << fmt::format("tightness   {:.6f}\n", *r.tightness);
  if (r.pq) s << fmt::format("pq          {:.6f}\n", *r.pq);
  return s.str();
}

int RunEvaluate(const EvaluateArgs& a, std::ostream& out) {
  const bool hiertext = a.protocol == "hiertext";
  if (!hiertext && a.level != "word") {
    throw ValidationError("evaluate: the icdar protocol scores words only");
  }
  if (!hiertext && a.no_recognition) {
    throw ValidationError("evaluate: --no-recognition applies to the hiertext protocol");
  }
  IcdarOptions icdar;
  icdar.mode = a.mode == "word-spotting" ? IcdarMode::kWordSpotting : IcdarMode::kEndToEnd;
  icdar.geometry =
      a.geometry == "rotated-rect" ? IcdarGeometry::kRotatedRect : IcdarGeometry::kPolygon;
  icdar.iou_threshold = a.iou;
  if (!a.lexicon.empty()) icdar.lexicon = ReadLexicon(a.lexicon);

  const std::vector<DocPair> pairs = PairDocuments(a.pred, a.gt);
  const HierLevel level = hiertext ? ParseLevel(a.level) : HierLevel::kWord;
  std::vector<EvalCounts> counts(pairs.size());
  ParallelFor(pairs.size(), a.jobs, [&](size_t i) {
    const HierDocument gt = HierDocumentFromJson(ReadJsonFile(pairs[i].gt));
    HierDocument pred;
    if (pairs[i].pred) pred = HierDocumentFromJson(ReadJsonFile(*pairs[i].pred));
    const std::vector<EvalEntity> p = EntitiesAt(pred, level);
    const std::vector<EvalEntity> g = EntitiesAt(gt, level);
    counts[i] = hiertext ? HiertextCounts(p, g, !a.no_recognition, a.iou)
                         : IcdarCounts(p, g, icdar);
  });

  EvalCounts total;
  for (const EvalCounts& c : counts) total += c;
  const EvalReport report = EvalReport::FromCounts(total, hiertext);
  const ReportMeta meta{a.protocol, hiertext ? a.level : "word", !a.no_recognition,
                        pairs.size()};
  std::string text;
  if (a.format == "table") {
    text = FormatTable(report, meta);
  } else {
    Json j = ToJson(report, meta);
    if (!hiertext) {
      j["mode"] = a.mode;
      j["geometry"] = a.geometry;
    }
    Json per_doc = Json::array();
    for (size_t i = 0; i < pairs.size(); ++i) {
      const EvalReport r = EvalReport::FromCounts(counts[i], hiertext);
      Json d = {{"name", pairs[i].name}, {"tp", r.counts.tp}, {"fp", r.counts.fp},
                {"fn", r.counts.fn},     {"f1", r.f1}};
      if (r.pq) d["pq"] = *r.pq;
      per_doc.push_back(std::move(d));
    }
    j["per_document"] = std::move(per_doc);
    text = j.dump(1) + "\n";
  }
  if (a.out.empty()) {
    out << text;
  } else {
    WriteText(text, a.out);
  }
  return kExitOk;
}

// -------------------------------------------------------------- fit-bezier

struct FitArgs {
  std::string input;
  std::string out;
  int order = kDefaultBezierOrder;
};

std::vector<Point2> PointsFromJson(const Json& j, const char* field) {
  if (!j.is_array()) throw ValidationError(fmt::format("'{}' must be an array", field));
  std::vector<Point2> pts;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw ValidationError(fmt::format("'{}' entries must be [x, y] pairs", field));
    }
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return pts;
}

int RunFitBezier(const FitArgs& a, std::ostream& out) {
  const Json in = ReadJsonFile(a.input);
  std::vector<Point2> top, bottom;
  if (in.contains("top") && in.contains("bottom")) {
    top = PointsFromJson(in["top"], "top");
    bottom = PointsFromJson(in["bottom"], "bottom");
  } else if (in.contains("vertices")) {
    const std::vector<Point2> ring = PointsFromJson(in["vertices"], "vertices");
    if (ring.size() % 2 != 0 || ring.size() < 4) {
      throw ValidationError("'vertices' must hold an even number (>= 4) of points");
    }
    const size_t half = ring.size() / 2;
    top.assign(ring.begin(), ring.begin() + half);
    bottom.assign(ring.rbegin(), ring.rbegin() + half);
  } else {
    throw ValidationError("fit-bezier input needs 'top' and 'bottom', or 'vertices'");
  }
  const BezierFit ft = FitBezier(top, a.order);
  const BezierFit fb = FitBezier(bottom, a.order);
  Json cps = Json::array();
  for (const BezierFit* f : {&ft, &fb}) {
    for (const Point2& p : f->curve.control_points()) cps.push_back({p.x, p.y});
  }
  const Json result = {{"schema_version", kSchemaVersion},
                       {"kind", "bezier_fit"},
                       {"bezier_order", a.order},
                       {"control_points", cps},
                       {"rms", {ft.rms, fb.rms}},
                       {"uniform_fallback", ft.uniform_fallback || fb.uniform_fallback}};
  if (a.out.empty()) {
    out << result.dump(1) << "\n";
  } else {
    WriteJsonFile(result, a.out);
  }
  return kExitOk;
}

// ------------------------------------------------------------ gen-fixtures

struct GenArgs {
  uint64_t seed = 0;
  int count = 1;
  std::string out;
  std::string paragraphs = "2:4";
  std::string lines = "1:3";
  std::string words = "2:5";
  std::string chars = "2:7";
  std::string line_height = "20:32";
  double curvature = 0.3;
  int width = 1024;
  int height = 1024;
  double confidence_noise = 0.0;
  double box_jitter = 0.0;
  std::string image_format = "pgm";
  int jobs = DefaultJobs();
};

int RunGenFixtures(const GenArgs& a) {
  FixtureSpec base;
  base.paragraphs = ParseRange(a.paragraphs);
  base.lines_per_paragraph = ParseRange(a.lines);
  base.words_per_line = ParseRange(a.words);
  base.chars_per_word = ParseRange(a.chars);
  base.line_height_px = ParseRange(a.line_height);
  base.curvature = a.curvature;
  base.image_size = {a.width, a.height};
  base.confidence_noise = a.confidence_noise;
  base.box_jitter_px = a.box_jitter;
  base.Validate();

  const fs::path root(a.out);
  for (const char* sub : {"gt", "det", "noisy"}) EnsureDirectory(root / sub);
  const bool images = a.image_format != "none";
  if (images) EnsureDirectory(root / "images");

  ParallelFor(static_cast<size_t>(a.count), a.jobs, [&](size_t i) {
    FixtureSpec spec = base;
    spec.seed = a.seed + i;
    const std::string name = fmt::format("fixture_{:05d}", spec.seed);
    Fixture fx = GenerateFixture(spec);
    if (images) {
      const std::string image_name = name + "." + a.image_format;
      WriteImage(fx.image, root / "images" / image_name);
      fx.perfect.image_ref = fx.noisy.image_ref = "../images/" + image_name;
    }
    WriteJsonFile(ToJson(fx.ground_truth, "ground_truth", fx.perfect.image_ref),
                  root / "gt" / (name + ".json"));
    WriteJsonFile(ToJson(fx.perfect), root / "det" / (name + ".json"));
    WriteJsonFile(ToJson(fx.noisy), root / "noisy" / (name + ".json"));
  });
  Logger()->info("wrote {} fixture(s) to {}", a.count, a.out);
  return kExitOk;
}

// --------------------------------------------------------------- visualize

struct VisualizeArgs {
  std::string input;
  std::string out;
};

int RunVisualize(const VisualizeArgs& a) {
  WriteSvg(HierDocumentFromJson(ReadJsonFile(a.input)), a.out);
  return kExitOk;
}

}  // namespace

int CliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ConfigureLogging();
  CLI::App app{"Hierarchical text spotting geometry toolkit", "hts_geom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hts_geom 1.0.0");

  AssembleArgs assemble;
  CLI::App* cmd_assemble =
      app.add_subcommand("assemble", "Detections + recognitions JSON -> hierarchy JSON");
  cmd_assemble->add_option("inputs", assemble.inputs, "Detection files or directories")
      ->required();
  cmd_assemble->add_option("-o,--out", assemble.out, "Output .json file or directory")
      ->required();
  cmd_assemble->add_option("--det-threshold", assemble.options.det_threshold)
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  cmd_assemble->add_option("--rec-threshold", assemble.options.rec_threshold)
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  cmd_assemble->add_option("--affinity-threshold", assemble.options.affinity_threshold)
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  cmd_assemble->add_option("--boundary-samples", assemble.options.boundary_samples,
                           "Samples per curve for line boundaries")
      ->check(CLI::Range(2, 4096))->capture_default_str();
  cmd_assemble->add_option("--max-crop-width", assemble.max_crop_width)
      ->check(CLI::Range(1, 1 << 16))->capture_default_str();
  cmd_assemble->add_option("-j,--jobs", assemble.jobs)->check(CLI::PositiveNumber);

  RectifyArgs rectify;
  CLI::App* cmd_rectify =
      app.add_subcommand("rectify", "Image + detections -> line crops + mapping JSON");
  cmd_rectify->add_option("--image", rectify.image, "PGM or PNG image")->required();
  cmd_rectify->add_option("--detections", rectify.detections)->required();
  cmd_rectify->add_option("-o,--out", rectify.out, "Output directory")->required();
  cmd_rectify->add_option("--crop-height", rectify.crop_height)
      ->check(CLI::Range(1, 4096))->capture_default_str();
  cmd_rectify->add_option("--max-width", rectify.max_width)
      ->check(CLI::Range(1, 1 << 16))->capture_default_str();

  EvaluateArgs evaluate;
  CLI::App* cmd_evaluate =
      app.add_subcommand("evaluate", "Score predictions against ground truth");
  cmd_evaluate->add_option("pred", evaluate.pred, "Prediction file or directory")->required();
  cmd_evaluate->add_option("gt", evaluate.gt, "Ground-truth file or directory")->required();
  cmd_evaluate->add_option("--protocol", evaluate.protocol)
      ->check(CLI::IsMember({"hiertext", "icdar"}))->capture_default_str();
  cmd_evaluate->add_option("--level", evaluate.level)
      ->check(CLI::IsMember({"word", "line", "paragraph"}))->capture_default_str();
  cmd_evaluate->add_option("--mode", evaluate.mode, "ICDAR mode")
      ->check(CLI::IsMember({"word-spotting", "end-to-end"}))->capture_default_str();
  cmd_evaluate->add_option("--geometry", evaluate.geometry, "ICDAR geometry")
      ->check(CLI::IsMember({"polygon", "rotated-rect"}))->capture_default_str();
  cmd_evaluate->add_option("--lexicon", evaluate.lexicon, "One entry per line");
  cmd_evaluate->add_flag("--no-recognition", evaluate.no_recognition,
                         "Score geometry only");
  cmd_evaluate->add_option("--iou", evaluate.iou)
      ->check(CLI::Range(1e-9, 1.0))->capture_default_str();
  cmd_evaluate->add_option("--format", evaluate.format)
      ->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  cmd_evaluate->add_option("-o,--out", evaluate.out, "Report file (default stdout)");
  cmd_evaluate->add_option("-j,--jobs", evaluate.jobs)->check(CLI::PositiveNumber);

  FitArgs fit;
  CLI::App* cmd_fit = app.add_subcommand("fit-bezier", "Polygon JSON -> control points");
  cmd_fit->add_option("input", fit.input, "JSON with top/bottom or vertices")->required();
  cmd_fit->add_option("-o,--out", fit.out, "Output file (default stdout)");
  cmd_fit->add_option("--order", fit.order)->check(CLI::Range(1, 16))->capture_default_str();

  GenArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("gen-fixtures", "Synthetic documents");
  cmd_gen->add_option("-o,--out", gen.out, "Output directory")->required();
  cmd_gen->add_option("--seed", gen.seed)->capture_default_str();
  cmd_gen->add_option("--count", gen.count)->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  cmd_gen->add_option("--paragraphs", gen.paragraphs, "MIN:MAX")->capture_default_str();
  cmd_gen->add_option("--lines", gen.lines, "Lines per paragraph, MIN:MAX")
      ->capture_default_str();
  cmd_gen->add_option("--words", gen.words, "Words per line, MIN:MAX")->capture_default_str();
  cmd_gen->add_option("--chars", gen.chars, "Characters per word, MIN:MAX")
      ->capture_default_str();
  cmd_gen->add_option("--line-height", gen.line_height, "Pixels, MIN:MAX")
      ->capture_default_str();
  cmd_gen->add_option("--curvature", gen.curvature, "Amplitude / line height")
      ->capture_default_str();
  cmd_gen->add_option("--width", gen.width)->check(CLI::Range(16, 1 << 15))
      ->capture_default_str();
  cmd_gen->add_option("--height", gen.height)->check(CLI::Range(16, 1 << 15))
      ->capture_default_str();
  cmd_gen->add_option("--confidence-noise", gen.confidence_noise)
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  cmd_gen->add_option("--box-jitter", gen.box_jitter, "Pixels")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  cmd_gen->add_option("--image-format", gen.image_format)
      ->check(CLI::IsMember({"pgm", "png", "none"}))->capture_default_str();
  cmd_gen->add_option("-j,--jobs", gen.jobs)->check(CLI::PositiveNumber);

  VisualizeArgs vis;
  CLI::App* cmd_vis = app.add_subcommand("visualize", "Hierarchy JSON -> SVG overlay");
  cmd_vis->add_option("input", vis.input, "Hierarchy or ground-truth JSON")->required();
  cmd_vis->add_option("-o,--out", vis.out, "SVG file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hts_geom: " << e.what() << "\n\n";
    const CLI::App* failed = &app;
    for (const CLI::App* sub : app.get_subcommands()) failed = sub;
    err << failed->help();
    return kExitValidation;
  }

  try {
    if (*cmd_assemble) return RunAssemble(assemble);
    if (*cmd_rectify) return RunRectify(rectify);
    if (*cmd_evaluate) return RunEvaluate(evaluate, out);
    if (*cmd_fit) return RunFitBezier(fit, out);
    if (*cmd_gen) return RunGenFixtures(gen);
    if (*cmd_vis) return RunVisualize(vis);
  } catch (const IoError& e) {
    err << "hts_geom: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "hts_geom: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "hts_geom: error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "hts_geom: error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

int CliMain(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return CliMain(args, std::cout, std::cerr);
}

}  // namespace hts::tools
