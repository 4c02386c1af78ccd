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

// Character -> word -> line -> paragraph assembly.
//
// Recognized lines are split into words on the space character, word boxes
// are the extent of their characters in crop space, and every box is
// projected to the image through the line's crop mapping. Lines are grouped
// into paragraphs by thresholding the detector's affinity matrix and taking
// connected components.

#ifndef HTS_HIERARCHY_H_
#define HTS_HIERARCHY_H_

#include <span>
#include <string>
#include <vector>

#include "hts/bezier.h"
#include "hts/geometry.h"
#include "hts/image.h"
#include "hts/polygon.h"
#include "hts/rectify.h"

namespace hts {

inline constexpr double kDefaultDetectorThreshold = 0.5;
inline constexpr double kDefaultRecognizerThreshold = 0.8;
inline constexpr double kDefaultAffinityThreshold = 0.5;

// One recognizer step. The box is in crop coordinates divided by the crop
// height (both axes).
struct CharResult {
  char32_t symbol = U' ';
  Box box;
  double confidence = 1.0;

  friend bool operator==(const CharResult&, const CharResult&) = default;
};

// Symmetric n x n matrix of line-pair scores with unit diagonal.
class AffinityMatrix {
 public:
  AffinityMatrix() = default;
  // Throws ValidationError on a non-square shape, values outside [0, 1],
  // asymmetry or diagonal error above 1e-6.
  AffinityMatrix(int n, std::vector<double> values);
  static AffinityMatrix Identity(int n);

  int n() const { return n_; }
  double at(int i, int j) const { return values_[i * n_ + j]; }
  const std::vector<double>& values() const { return values_; }

  // Rows and columns restricted to `keep`, in that order.
  AffinityMatrix Select(std::span<const int> keep) const;

  friend bool operator==(const AffinityMatrix&, const AffinityMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> values_;
};

struct HierChar {
  std::string text;
  Quad quad{};
  double confidence = 1.0;
  friend bool operator==(const HierChar&, const HierChar&) = default;
};

struct HierWord {
  std::string text;
  Quad quad{};
  std::vector<HierChar> chars;
  // Excluded from scoring; only meaningful in ground truth.
  bool do_not_care = false;
  friend bool operator==(const HierWord&, const HierWord&) = default;
};

struct HierLine {
  std::string text;
  // Boundary in image pixels.
  Polygon vertices;
  // Normalized image coordinates, as detected.
  std::vector<Point2> control_points;
  double confidence = 1.0;
  std::vector<HierWord> words;
  friend bool operator==(const HierLine&, const HierLine&) = default;
};

struct HierParagraph {
  std::string text;
  Polygon vertices;
  std::vector<HierLine> lines;
  friend bool operator==(const HierParagraph&, const HierParagraph&) = default;
};

struct HierDocument {
  ImageSize image_size;
  std::vector<HierParagraph> paragraphs;

  size_t CountLines() const;
  size_t CountWords() const;
  size_t CountChars() const;
  friend bool operator==(const HierDocument&, const HierDocument&) = default;
};

// Checks the text and non-emptiness invariants. Words without characters are
// allowed (ground truth often has none); when present, their symbols must
// spell the word. Throws ValidationError.
void ValidateDocument(const HierDocument& doc);

// Maximal runs of non-space characters, in order.
std::vector<std::vector<CharResult>> SplitLine(std::span<const CharResult> chars);

// Extent of the character boxes. Throws DomainError for an empty word.
Box WordBox(std::span<const CharResult> chars);

// Connected components of {(i, j) : i != j, aff(i, j) >= threshold}, each
// sorted, components ordered by their smallest member.
// Throws DomainError when threshold is outside [0, 1].
std::vector<std::vector<int>> GroupParagraphs(const AffinityMatrix& aff,
                                              double threshold);

// Geometric mean of the character confidences; 0 for no characters.
double LineRecognitionConfidence(std::span<const CharResult> chars);

struct LineRecognition {
  std::vector<CharResult> chars;
  double confidence = 1.0;
};

struct AssemblyInput {
  ImageSize image_size;
  std::vector<BezierLinePolygon> detections;
  AffinityMatrix affinity;
  std::vector<LineRecognition> recognitions;
  std::vector<CropMapping> mappings;
};

struct AssemblyOptions {
  double det_threshold = kDefaultDetectorThreshold;
  double rec_threshold = kDefaultRecognizerThreshold;
  double affinity_threshold = kDefaultAffinityThreshold;
  int boundary_samples = kDefaultSamplesPerSide;
};

// Drops lines under either confidence threshold (and their affinity rows)
// before clustering, then drops lines that have no words and paragraphs
// left empty. Character boxes are clamped to the crop before projection.
// Throws DomainError when the parallel inputs differ in length.
HierDocument AssembleDocument(const AssemblyInput& input,
                              const AssemblyOptions& options = {});

// A word is its projected quad.
RegionSet EntityGeometry(const HierWord& word);
// Union of the descendant character quads, in image pixels. A word without
// characters contributes its own quad.
RegionSet EntityGeometry(const HierLine& line);
RegionSet EntityGeometry(const HierParagraph& paragraph);

}  // namespace hts

#endif  // HTS_HIERARCHY_H_
