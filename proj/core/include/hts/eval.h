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

// Text spotting and layout evaluation.
//
// Two protocols share one matcher: predictions and ground truth are paired
// one-to-one greedily in descending IoU order (ties broken by prediction
// index, then ground-truth index) among pairs that reach the IoU threshold
// and, when text is scored, agree on text.
//
//  * ICDAR-2015 style: case-insensitive, with the Word-Spotting or
//    End-to-End normalization rules and optional lexicons. Geometry is either
//    the general polygon or its minimum-area rotated rectangle.
//  * HierText style: exact strings, no filtering, and Tightness / PQ on top
//    of precision, recall and F1, at word, line or paragraph level.
//
// These follow the published protocol rules, not the official scripts; small
// differences from the online evaluators are possible.

#ifndef HTS_EVAL_H_
#define HTS_EVAL_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hts/geometry.h"
#include "hts/hierarchy.h"
#include "hts/polygon.h"

namespace hts {

inline constexpr double kDefaultMatchIou = 0.5;
inline constexpr int kMinWordSpottingLetters = 3;

// Unit-cost edit distance over Unicode code points.
size_t Levenshtein(std::string_view a, std::string_view b);

struct LexiconMatch {
  std::string entry;
  size_t distance = 0;
};

// Entry with the smallest case-insensitive distance; the earliest wins ties.
// Throws DomainError for an empty lexicon.
LexiconMatch MatchLexicon(std::string_view word,
                          std::span<const std::string> lexicon);

// Word-Spotting normalization, in this order: drop a trailing 's or 'S,
// strip leading and trailing dashes, remove remaining punctuation, lowercase.
// Absent when fewer than three alphabetic characters remain.
std::optional<std::string> NormalizeWordSpotting(std::string_view text);

// Output transform for ICDAR scoring: lowercase, keep only alphanumerics,
// drop punctuation-only words, then snap to the lexicon when one is given
// (the lexicon entry is returned lowercased).
std::optional<std::string> NormalizePredictionIcdar(
    std::string_view word, std::span<const std::string> lexicon = {});

// Strips leading and trailing ASCII punctuation.
std::string StripEdgePunctuation(std::string_view text);

struct PolygonIouResult {
  double iou = 0.0;
  // At least one input crossed itself and was resolved with even-odd.
  bool cleaned = false;
};

PolygonIouResult PolygonIouDetailed(std::span<const Point2> a,
                                    std::span<const Point2> b);
double PolygonIou(std::span<const Point2> a, std::span<const Point2> b);

struct EvalEntity {
  RegionSet geometry;
  std::optional<std::string> text;
  double confidence = 1.0;
  bool do_not_care = false;
  bool cleaned = false;

  static EvalEntity FromPolygon(std::span<const Point2> ring,
                                std::optional<std::string> text = std::nullopt,
                                bool do_not_care = false);
};

struct MatchPair {
  int pred = 0;
  int gt = 0;
  double iou = 0.0;
  friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

// Extra condition a pair must meet before its IoU is considered.
using PairFilter = std::function<bool(int pred, int gt)>;

// Throws DomainError unless 0 < iou_threshold <= 1.
std::vector<MatchPair> MatchOneToOne(std::span<const EvalEntity> preds,
                                     std::span<const EvalEntity> gts,
                                     double iou_threshold = kDefaultMatchIou,
                                     const PairFilter& filter = {});

// Additive counts; reports from several images combine by summing these.
struct EvalCounts {
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;
  double iou_sum = 0.0;

  EvalCounts& operator+=(const EvalCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    iou_sum += o.iou_sum;
    return *this;
  }
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> tightness;
  std::optional<double> pq;
  EvalCounts counts;

  // Ratios with 0/0 taken as 0. Tightness is the mean IoU over true
  // positives (0 without any), and pq is f1 * tightness.
  static EvalReport FromCounts(const EvalCounts& counts, bool with_tightness);
};

enum class IcdarMode { kWordSpotting, kEndToEnd };
enum class IcdarGeometry { kPolygon, kRotatedRect };

struct IcdarOptions {
  IcdarMode mode = IcdarMode::kEndToEnd;
  IcdarGeometry geometry = IcdarGeometry::kPolygon;
  std::vector<std::string> lexicon;
  double iou_threshold = kDefaultMatchIou;
};

// Predictions are transformed with NormalizePredictionIcdar (and, for Word
// Spotting, NormalizeWordSpotting); those that normalize away are dropped.
// Ground truth that normalizes away or is flagged do-not-care is excluded,
// and predictions matched only to excluded regions are not counted.
EvalCounts IcdarCounts(std::span<const EvalEntity> preds,
                       std::span<const EvalEntity> gts,
                       const IcdarOptions& options);
EvalReport IcdarEval(std::span<const EvalEntity> preds,
                     std::span<const EvalEntity> gts,
                     const IcdarOptions& options);

enum class HierLevel { kWord, kLine, kParagraph };

// Flattens a document into entities at one level. Words use their quads;
// lines and paragraphs use the union of their character quads.
std::vector<EvalEntity> EntitiesAt(const HierDocument& doc, HierLevel level);

EvalCounts HiertextCounts(std::span<const EvalEntity> preds,
                          std::span<const EvalEntity> gts, bool recognition,
                          double iou_threshold = kDefaultMatchIou);
EvalReport HiertextEval(const HierDocument& pred, const HierDocument& gt,
                        HierLevel level, bool recognition);

}  // namespace hts

#endif  // HTS_EVAL_H_
