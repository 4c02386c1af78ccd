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

// Synthetic documents with exact ground truth.
//
// Paragraphs of text lines are laid out top to bottom. Each line follows a
// sinusoidal baseline fitted with a cubic Bezier, its bottom curve is the
// top curve shifted down by the line height, and its glyphs are filled
// rectangles placed in crop space and projected into the image. Ground truth,
// a perfect detector/recognizer output, and a perturbed one are produced from
// the same layout.

#ifndef HTS_FIXTURE_H_
#define HTS_FIXTURE_H_

#include <cstdint>
#include <vector>

#include "hts/document.h"
#include "hts/hierarchy.h"
#include "hts/image.h"

namespace hts {

struct IntRange {
  int min = 0;
  int max = 0;
};

struct FixtureSpec {
  uint64_t seed = 0;
  IntRange paragraphs{2, 4};
  IntRange lines_per_paragraph{1, 3};
  IntRange words_per_line{2, 5};
  IntRange chars_per_word{2, 7};
  IntRange line_height_px{20, 32};
  // Baseline sinusoid amplitude as a fraction of the line height.
  double curvature = 0.3;
  ImageSize image_size{1024, 1024};
  // Upper bound of the confidence decrease applied to noisy outputs.
  double confidence_noise = 0.0;
  // Maximum displacement of each noisy character box edge, image pixels.
  double box_jitter_px = 0.0;
  int crop_height = kDefaultCropHeight;

  // Throws DomainError for empty ranges or negative amplitudes.
  void Validate() const;
};

struct Fixture {
  GrayImage image;
  HierDocument ground_truth;
  DetectionsDocument perfect;
  DetectionsDocument noisy;
  // Line indices of each paragraph, in detection order.
  std::vector<std::vector<int>> paragraph_lines;
};

inline constexpr int kMaxLayoutAttempts = 100;

// Deterministic in spec.seed. Noise draws come from their own stream, so two
// specs that differ only in noise magnitudes share every unit draw.
// Throws DomainError when no non-overlapping layout fits after
// kMaxLayoutAttempts tries.
Fixture GenerateFixture(const FixtureSpec& spec);

}  // namespace hts

#endif  // HTS_FIXTURE_H_
