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

// Detection and recognition training losses as plain numerics.

#ifndef HTS_LOSSES_H_
#define HTS_LOSSES_H_

#include <optional>
#include <span>
#include <vector>

#include "hts/geometry.h"
#include "hts/lsdm.h"

namespace hts {

struct DetectionLossWeights {
  double giou = 1.0;       // lambda1
  double aabb_l1 = 2.5;    // lambda2
  double local_l1 = 0.5;   // lambda3
};

inline constexpr double kDefaultBoxLossWeight = 0.05;  // lambda4
inline constexpr double kDefaultLossEpsilon = 1e-6;

// Generalized IoU of two center/size boxes, in [-1, 1]. Two zero-area boxes
// give 0.
double Giou(const Aabb& a, const Aabb& b);

// Plain IoU of two center/size boxes; 0 when the union is empty.
double BoxIou(const Aabb& a, const Aabb& b);

struct LsdmPrediction {
  Aabb box;
  LocalBezier local;
};

// unified_loss + l1 (1 - GIoU) + l2 mean|box diff| + l3 mean|local diff|.
// Both L1 terms average over coordinates: 4 for the box (center/size form),
// 4(m+1) for the local points.
// Throws DomainError on mismatched point counts, a negative unified_loss or
// a negative weight.
double DetectionLoss(const LsdmPrediction& pred, const LsdmPrediction& gt,
                     const DetectionLossWeights& weights, double unified_loss);

struct RecognitionStepTarget {
  int class_index = 0;
  // Present exactly when the step has a ground-truth character box.
  std::optional<Box> box;
};

// Mean absolute difference of the four corner coordinates.
double BoxL1(const Box& a, const Box& b);

struct RecognitionLineInput {
  std::vector<double> step_ce;
  std::vector<RecognitionStepTarget> targets;
  std::vector<Box> pred_boxes;
};

// mean(step_ce) + lambda4 * sum(alpha_t * L1_t) / (sum(alpha_t) + epsilon).
// Throws DomainError on length mismatch or T == 0.
double RecognitionLoss(std::span<const double> step_ce,
                       std::span<const RecognitionStepTarget> targets,
                       std::span<const Box> pred_boxes,
                       double lambda4 = kDefaultBoxLossWeight,
                       double epsilon = kDefaultLossEpsilon);

// Batch reduction: cross-entropy averaged over all pooled steps; box
// numerator and indicator count pooled before the division.
// Throws DomainError on an empty batch.
double RecognitionLossBatch(std::span<const RecognitionLineInput> lines,
                            double lambda4 = kDefaultBoxLossWeight,
                            double epsilon = kDefaultLossEpsilon);

}  // namespace hts

#endif  // HTS_LOSSES_H_
