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

// In-memory form of the detection/recognition hand-off between the detector
// stage and document assembly.

#ifndef HTS_DOCUMENT_H_
#define HTS_DOCUMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "hts/bezier.h"
#include "hts/hierarchy.h"
#include "hts/image.h"
#include "hts/rectify.h"

namespace hts {

inline constexpr char kSchemaVersion[] = "hts-geom/1";

struct RecognitionRecord {
  std::vector<CharResult> chars;
  // Geometric mean of the character confidences when absent.
  std::optional<double> confidence;
  // Computed from the polygon when absent.
  std::optional<int> crop_width;
  int crop_height = kDefaultCropHeight;

  friend bool operator==(const RecognitionRecord&, const RecognitionRecord&) = default;
};

struct DetectionsDocument {
  std::optional<std::string> image_ref;
  ImageSize image_size;
  int bezier_order = kDefaultBezierOrder;
  // Normalized image coordinates; each polygon carries its confidence.
  std::vector<BezierLinePolygon> lines;
  AffinityMatrix affinity;
  std::vector<RecognitionRecord> recognitions;

  friend bool operator==(const DetectionsDocument&, const DetectionsDocument&) = default;
};

// Crop mapping for one line, computing the width when the record has none.
CropMapping MappingFor(const BezierLinePolygon& line, ImageSize image_size,
                       const RecognitionRecord& rec,
                       int max_width = kDefaultMaxCropWidth);

// Builds assembly input. Lengths are carried over unchanged so that
// AssembleDocument reports any mismatch.
AssemblyInput ToAssemblyInput(const DetectionsDocument& doc,
                              int max_width = kDefaultMaxCropWidth);

}  // namespace hts

#endif  // HTS_DOCUMENT_H_
