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

#include "hts/document.h"

#include <algorithm>

namespace hts {

CropMapping MappingFor(const BezierLinePolygon& line, ImageSize image_size,
                       const RecognitionRecord& rec, int max_width) {
  const int width = rec.crop_width
                        ? *rec.crop_width
                        : ComputeCropWidth(line, image_size, rec.crop_height, max_width);
  return CropMapping(line, width, rec.crop_height, image_size);
}

AssemblyInput ToAssemblyInput(const DetectionsDocument& doc, int max_width) {
  AssemblyInput in;
  in.image_size = doc.image_size;
  in.detections = doc.lines;
  in.affinity = doc.affinity;
  const size_t paired = std::min(doc.lines.size(), doc.recognitions.size());
  for (size_t i = 0; i < doc.recognitions.size(); ++i) {
    const RecognitionRecord& rec = doc.recognitions[i];
    LineRecognition lr;
    lr.chars = rec.chars;
    lr.confidence = rec.confidence ? *rec.confidence : LineRecognitionConfidence(rec.chars);
    in.recognitions.push_back(std::move(lr));
    if (i < paired) {
      in.mappings.push_back(MappingFor(doc.lines[i], doc.image_size, rec, max_width));
    }
  }
  return in;
}

}  // namespace hts
