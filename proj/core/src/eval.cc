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

#include "hts/eval.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "hts/errors.h"
#include "hts/text.h"

namespace hts {

namespace {

bool IsAsciiPunct(char32_t c) { return c < 0x80 && std::ispunct(static_cast<int>(c)); }
bool IsAsciiAlpha(char32_t c) { return c < 0x80 && std::isalpha(static_cast<int>(c)); }
bool IsAsciiAlnum(char32_t c) { return c < 0x80 && std::isalnum(static_cast<int>(c)); }

std::u32string LowerAscii(std::u32string s) {
  for (char32_t& c : s) {
    if (c >= U'A' && c <= U'Z') c = c - U'A' + U'a';
  }
  return s;
}

std::string LowerAscii(std::string_view s) {
  return Utf8Encode(LowerAscii(Utf8Decode(s)));
}

bool Overlaps(const Aabb& a, const Aabb& b) {
  return a.min_x() <= b.max_x() && b.min_x() <= a.max_x() &&
         a.min_y() <= b.max_y() && b.min_y() <= a.max_y();
}

std::vector<Aabb> Bounds(std::span<const EvalEntity> entities) {
  std::vector<Aabb> out;
  out.reserve(entities.size());
  for (const EvalEntity& e : entities) out.push_back(BoundsOf(e.geometry));
  return out;
}

// Splits ground truth into scored and excluded entries, matches predictions
// against the scored ones, and discards leftover predictions that land on an
// excluded region.
EvalCounts ScoreWithExclusions(std::span<const EvalEntity> preds,
                               std::span<const EvalEntity> gts,
                               const std::vector<bool>& excluded,
                               double iou_threshold, const PairFilter& filter) {
  std::vector<EvalEntity> care;
  std::vector<int> care_index;
  std::vector<EvalEntity> ignored;
  for (size_t j = 0; j < gts.size(); ++j) {
    if (excluded[j]) {
      ignored.push_back(gts[j]);
    } else {
      care_index.push_back(static_cast<int>(j));
      care.push_back(gts[j]);
    }
  }
  PairFilter mapped;
  if (filter) {
    mapped = [&](int p, int g) { return filter(p, care_index[g]); };
  }
  const std::vector<MatchPair> matches =
      MatchOneToOne(preds, care, iou_threshold, mapped);

  EvalCounts counts;
  counts.tp = matches.size();
  for (const MatchPair& m : matches) counts.iou_sum += m.iou;
  counts.fn = care.size() - matches.size();

  std::vector<bool> matched(preds.size(), false);
  for (const MatchPair& m : matches) matched[m.pred] = true;
  const std::vector<Aabb> ignored_bounds = Bounds(ignored);
  for (size_t i = 0; i < preds.size(); ++i) {
    if (matched[i]) continue;
    const Aabb pb = BoundsOf(preds[i].geometry);
    bool absorbed = false;
    for (size_t k = 0; k < ignored.size() && !absorbed; ++k) {
      if (!Overlaps(pb, ignored_bounds[k])) continue;
      absorbed = RegionIou(preds[i].geometry, ignored[k].geometry) >= iou_threshold;
    }
    if (!absorbed) ++counts.fp;
  }
  return counts;
}

double Ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

size_t Levenshtein(std::string_view a, std::string_view b) {
  const std::u32string s = Utf8Decode(a);
  const std::u32string t = Utf8Decode(b);
  std::vector<size_t> row(t.size() + 1);
  for (size_t j = 0; j <= t.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= s.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= t.size(); ++j) {
      const size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (s[i - 1] == t[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[t.size()];
}

LexiconMatch MatchLexicon(std::string_view word,
                          std::span<const std::string> lexicon) {
  if (lexicon.empty()) throw DomainError("lexicon is empty");
  const std::string key = LowerAscii(word);
  LexiconMatch best{lexicon.front(), Levenshtein(key, LowerAscii(lexicon.front()))};
  for (size_t i = 1; i < lexicon.size() && best.distance > 0; ++i) {
    const size_t d = Levenshtein(key, LowerAscii(lexicon[i]));
    if (d < best.distance) best = {lexicon[i], d};
  }
  return best;
}

std::optional<std::string> NormalizeWordSpotting(std::string_view text) {
  std::u32string s = Utf8Decode(text);
  if (s.size() >= 2 && s[s.size() - 2] == U'\'' &&
      (s.back() == U's' || s.back() == U'S')) {
    s.resize(s.size() - 2);
  }
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && s[begin] == U'-') ++begin;
  while (end > begin && s[end - 1] == U'-') --end;
  std::u32string kept;
  for (size_t i = begin; i < end; ++i) {
    if (!IsAsciiPunct(s[i])) kept.push_back(s[i]);
  }
  kept = LowerAscii(std::move(kept));
  const auto letters = std::count_if(kept.begin(), kept.end(), IsAsciiAlpha);
  if (letters < kMinWordSpottingLetters) return std::nullopt;
  return Utf8Encode(kept);
}

std::optional<std::string> NormalizePredictionIcdar(
    std::string_view word, std::span<const std::string> lexicon) {
  std::u32string kept;
  for (char32_t c : LowerAscii(Utf8Decode(word))) {
    // Non-ASCII code points are treated as letters.
    if (IsAsciiAlnum(c) || c >= 0x80) kept.push_back(c);
  }
  if (kept.empty()) return std::nullopt;
  std::string out = Utf8Encode(kept);
  if (!lexicon.empty()) out = LowerAscii(MatchLexicon(out, lexicon).entry);
  return out;
}

std::string StripEdgePunctuation(std::string_view text) {
  const std::u32string s = Utf8Decode(text);
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && IsAsciiPunct(s[begin])) ++begin;
  while (end > begin && IsAsciiPunct(s[end - 1])) --end;
  return Utf8Encode(std::u32string_view(s).substr(begin, end - begin));
}

PolygonIouResult PolygonIouDetailed(std::span<const Point2> a,
                                    std::span<const Point2> b) {
  const CleanedPolygon ca = CleanPolygon(a);
  const CleanedPolygon cb = CleanPolygon(b);
  return {RegionIou(ca.region, cb.region),
          ca.was_self_intersecting || cb.was_self_intersecting};
}

double PolygonIou(std::span<const Point2> a, std::span<const Point2> b) {
  return PolygonIouDetailed(a, b).iou;
}

EvalEntity EvalEntity::FromPolygon(std::span<const Point2> ring,
                                   std::optional<std::string> text,
                                   bool do_not_care) {
  CleanedPolygon c = CleanPolygon(ring);
  EvalEntity e;
  e.geometry = std::move(c.region);
  e.cleaned = c.was_self_intersecting;
  e.text = std::move(text);
  e.do_not_care = do_not_care;
  return e;
}

std::vector<MatchPair> MatchOneToOne(std::span<const EvalEntity> preds,
                                     std::span<const EvalEntity> gts,
                                     double iou_threshold,
                                     const PairFilter& filter) {
  if (!(iou_threshold > 0.0 && iou_threshold <= 1.0)) {
    throw DomainError("IoU threshold must be in (0, 1]");
  }
  const std::vector<Aabb> pb = Bounds(preds);
  const std::vector<Aabb> gb = Bounds(gts);
  std::vector<MatchPair> candidates;
  for (size_t i = 0; i < preds.size(); ++i) {
    for (size_t j = 0; j < gts.size(); ++j) {
      if (!Overlaps(pb[i], gb[j])) continue;
      if (filter && !filter(static_cast<int>(i), static_cast<int>(j))) continue;
      const double iou = RegionIou(preds[i].geometry, gts[j].geometry);
      if (iou >= iou_threshold) {
        candidates.push_back({static_cast<int>(i), static_cast<int>(j), iou});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const MatchPair& a, const MatchPair& b) {
              if (a.iou != b.iou) return a.iou > b.iou;
              if (a.pred != b.pred) return a.pred < b.pred;
              return a.gt < b.gt;
            });
  std::vector<bool> pred_used(preds.size(), false);
  std::vector<bool> gt_used(gts.size(), false);
  std::vector<MatchPair> out;
  for (const MatchPair& c : candidates) {
    if (pred_used[c.pred] || gt_used[c.gt]) continue;
    pred_used[c.pred] = true;
    gt_used[c.gt] = true;
    out.push_back(c);
  }
  return out;
}

EvalReport EvalReport::FromCounts(const EvalCounts& counts,
                                  bool with_tightness) {
  EvalReport r;
  r.counts = counts;
  const double tp = static_cast<double>(counts.tp);
  r.precision = Ratio(tp, tp + counts.fp);
  r.recall = Ratio(tp, tp + counts.fn);
  r.f1 = Ratio(2 * r.precision * r.recall, r.precision + r.recall);
  if (with_tightness) {
    r.tightness = Ratio(counts.iou_sum, tp);
    r.pq = r.f1 * *r.tightness;
  }
  return r;
}

EvalCounts IcdarCounts(std::span<const EvalEntity> preds,
                       std::span<const EvalEntity> gts,
                       const IcdarOptions& options) {
  const bool spotting = options.mode == IcdarMode::kWordSpotting;
  auto shape = [&](const EvalEntity& e) {
    if (options.geometry == IcdarGeometry::kPolygon) return e.geometry;
    std::vector<Point2> pts;
    for (const Region& r : e.geometry) pts.insert(pts.end(), r.outer.begin(), r.outer.end());
    const Quad q = MinAreaRect(pts);
    return CleanPolygon(std::vector<Point2>(q.begin(), q.end())).region;
  };

  std::vector<EvalEntity> p;
  std::vector<std::string> p_text;
  for (const EvalEntity& e : preds) {
    if (!e.text) continue;
    std::optional<std::string> t = NormalizePredictionIcdar(*e.text, options.lexicon);
    if (t && spotting) t = NormalizeWordSpotting(*t);
    if (!t) continue;
    EvalEntity copy = e;
    copy.geometry = shape(e);
    p.push_back(std::move(copy));
    p_text.push_back(std::move(*t));
  }

  std::vector<EvalEntity> g;
  std::vector<bool> excluded;
  // Accepted strings per ground-truth entry.
  std::vector<std::vector<std::string>> g_text;
  for (const EvalEntity& e : gts) {
    EvalEntity copy = e;
    copy.geometry = shape(e);
    std::vector<std::string> accepted;
    bool skip = e.do_not_care || !e.text || e.text->empty();
    if (!skip && spotting) {
      const std::optional<std::string> t = NormalizeWordSpotting(*e.text);
      if (t) {
        accepted.push_back(*t);
      } else {
        skip = true;
      }
    } else if (!skip) {
      const std::string lower = LowerAscii(*e.text);
      accepted.push_back(lower);
      accepted.push_back(StripEdgePunctuation(lower));
    }
    g.push_back(std::move(copy));
    excluded.push_back(skip);
    g_text.push_back(std::move(accepted));
  }

  const PairFilter text_ok = [&](int pi, int gi) {
    const auto& acc = g_text[gi];
    return std::find(acc.begin(), acc.end(), p_text[pi]) != acc.end();
  };
  return ScoreWithExclusions(p, g, excluded, options.iou_threshold, text_ok);
}

EvalReport IcdarEval(std::span<const EvalEntity> preds,
                     std::span<const EvalEntity> gts,
                     const IcdarOptions& options) {
  return EvalReport::FromCounts(IcdarCounts(preds, gts, options), false);
}

std::vector<EvalEntity> EntitiesAt(const HierDocument& doc, HierLevel level) {
  std::vector<EvalEntity> out;
  for (const HierParagraph& p : doc.paragraphs) {
    if (level == HierLevel::kParagraph) {
      EvalEntity e;
      e.geometry = EntityGeometry(p);
      e.text = p.text;
      out.push_back(std::move(e));
      continue;
    }
    for (const HierLine& l : p.lines) {
      if (level == HierLevel::kLine) {
        EvalEntity e;
        e.geometry = EntityGeometry(l);
        e.text = l.text;
        e.confidence = l.confidence;
        out.push_back(std::move(e));
        continue;
      }
      for (const HierWord& w : l.words) {
        EvalEntity e;
        e.geometry = EntityGeometry(w);
        e.text = w.text;
        e.do_not_care = w.do_not_care;
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

EvalCounts HiertextCounts(std::span<const EvalEntity> preds,
                          std::span<const EvalEntity> gts, bool recognition,
                          double iou_threshold) {
  std::vector<bool> excluded;
  for (const EvalEntity& g : gts) excluded.push_back(g.do_not_care);
  PairFilter filter;
  if (recognition) {
    filter = [&](int pi, int gi) {
      return preds[pi].text && gts[gi].text && *preds[pi].text == *gts[gi].text;
    };
  }
  return ScoreWithExclusions(preds, gts, excluded, iou_threshold, filter);
}

EvalReport HiertextEval(const HierDocument& pred, const HierDocument& gt,
                        HierLevel level, bool recognition) {
  const std::vector<EvalEntity> p = EntitiesAt(pred, level);
  const std::vector<EvalEntity> g = EntitiesAt(gt, level);
  return EvalReport::FromCounts(HiertextCounts(p, g, recognition), true);
}

}  // namespace hts
