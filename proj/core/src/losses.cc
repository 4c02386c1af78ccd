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

#include "hts/losses.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hts/errors.h"

namespace hts {

namespace {

double OverlapArea(const Aabb& a, const Aabb& b) {
  const double w = std::min(a.max_x(), b.max_x()) - std::max(a.min_x(), b.min_x());
  const double h = std::min(a.max_y(), b.max_y()) - std::max(a.min_y(), b.min_y());
  return std::max(w, 0.0) * std::max(h, 0.0);
}

void CheckBox(const Aabb& a) {
  if (!(a.w >= 0.0) || !(a.h >= 0.0)) {
    throw DomainError("box width and height must be non-negative");
  }
}

struct LinePartials {
  double ce_sum = 0.0;
  double steps = 0.0;
  double box_sum = 0.0;
  double alpha_sum = 0.0;
};

LinePartials Accumulate(std::span<const double> step_ce,
                        std::span<const RecognitionStepTarget> targets,
                        std::span<const Box> pred_boxes) {
  if (step_ce.size() != targets.size() || step_ce.size() != pred_boxes.size()) {
    throw DomainError("recognition loss inputs differ in length: " +
                      std::to_string(step_ce.size()) + ", " +
                      std::to_string(targets.size()) + ", " +
                      std::to_string(pred_boxes.size()));
  }
  if (step_ce.empty()) throw DomainError("recognition loss needs T >= 1");
  LinePartials p;
  for (size_t t = 0; t < step_ce.size(); ++t) {
    p.ce_sum += step_ce[t];
    if (targets[t].box) {
      p.box_sum += BoxL1(*targets[t].box, pred_boxes[t]);
      p.alpha_sum += 1.0;
    }
  }
  p.steps = static_cast<double>(step_ce.size());
  return p;
}

}  // namespace

double BoxIou(const Aabb& a, const Aabb& b) {
  CheckBox(a);
  CheckBox(b);
  const double inter = OverlapArea(a, b);
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

double Giou(const Aabb& a, const Aabb& b) {
  CheckBox(a);
  CheckBox(b);
  const double inter = OverlapArea(a, b);
  const double uni = a.area() + b.area() - inter;
  const Aabb hull = Union(a, b);
  const double hull_area = hull.area();
  if (hull_area <= 0.0) return 0.0;
  const double iou = uni > 0.0 ? inter / uni : 0.0;
  // Rounding can make hull_area - uni slightly negative; the penalty is >= 0.
  return std::clamp(iou - std::max(0.0, hull_area - uni) / hull_area, -1.0, 1.0);
}

double DetectionLoss(const LsdmPrediction& pred, const LsdmPrediction& gt,
                     const DetectionLossWeights& weights,
                     double unified_loss) {
  if (pred.local.size() != gt.local.size()) {
    throw DomainError("local point counts differ: " +
                      std::to_string(pred.local.size()) + " vs " +
                      std::to_string(gt.local.size()));
  }
  if (!(unified_loss >= 0.0)) {
    throw DomainError("unified detector loss must be non-negative");
  }
  if (!(weights.giou >= 0.0 && weights.aabb_l1 >= 0.0 && weights.local_l1 >= 0.0)) {
    throw DomainError("detection loss weights must be non-negative");
  }
  const double giou_term = 1.0 - Giou(pred.box, gt.box);
  const double box_l1 = (std::abs(pred.box.x_center - gt.box.x_center) +
                         std::abs(pred.box.y_center - gt.box.y_center) +
                         std::abs(pred.box.w - gt.box.w) +
                         std::abs(pred.box.h - gt.box.h)) /
                        4.0;
  double local_sum = 0.0;
  const auto& p = pred.local.points();
  const auto& g = gt.local.points();
  for (size_t i = 0; i < p.size(); ++i) {
    local_sum += std::abs(p[i].x - g[i].x) + std::abs(p[i].y - g[i].y);
  }
  const double local_l1 = local_sum / (2.0 * p.size());
  return unified_loss + weights.giou * giou_term + weights.aabb_l1 * box_l1 +
         weights.local_l1 * local_l1;
}

double BoxL1(const Box& a, const Box& b) {
  return (std::abs(a.x0 - b.x0) + std::abs(a.y0 - b.y0) +
          std::abs(a.x1 - b.x1) + std::abs(a.y1 - b.y1)) /
         4.0;
}

double RecognitionLoss(std::span<const double> step_ce,
                       std::span<const RecognitionStepTarget> targets,
                       std::span<const Box> pred_boxes, double lambda4,
                       double epsilon) {
  const LinePartials p = Accumulate(step_ce, targets, pred_boxes);
  return p.ce_sum / p.steps + lambda4 * p.box_sum / (p.alpha_sum + epsilon);
}

double RecognitionLossBatch(std::span<const RecognitionLineInput> lines,
                            double lambda4, double epsilon) {
  if (lines.empty()) throw DomainError("recognition loss batch is empty");
  LinePartials total;
  for (const RecognitionLineInput& line : lines) {
    const LinePartials p =
        Accumulate(line.step_ce, line.targets, line.pred_boxes);
    total.ce_sum += p.ce_sum;
    total.steps += p.steps;
    total.box_sum += p.box_sum;
    total.alpha_sum += p.alpha_sum;
  }
  return total.ce_sum / total.steps +
         lambda4 * total.box_sum / (total.alpha_sum + epsilon);
}

}  // namespace hts
