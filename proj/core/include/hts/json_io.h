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

// JSON documents. Every file carries "schema_version": "hts-geom/1" and a
// "kind" of "detections", "hierarchy", "ground_truth" or "report"; the full
// layout is described in docs/schema.md.

#ifndef HTS_JSON_IO_H_
#define HTS_JSON_IO_H_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "hts/document.h"
#include "hts/eval.h"
#include "hts/hierarchy.h"

namespace hts {

using Json = nlohmann::json;

// Throws IoError when unreadable, ValidationError on malformed JSON.
Json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const Json& json, const std::filesystem::path& path);

Json ToJson(const DetectionsDocument& doc);
// Rejects wrong control-point counts, confidences outside [0, 1], invalid
// affinity matrices, and coordinates more than 10% outside the image.
// Throws ValidationError.
DetectionsDocument DetectionsFromJson(const Json& json);

// kind is "hierarchy" or "ground_truth".
Json ToJson(const HierDocument& doc, const std::string& kind = "hierarchy",
            const std::optional<std::string>& image_ref = std::nullopt);
// Validates structure, text invariants, quad sizes, and bounds.
// Throws ValidationError.
HierDocument HierDocumentFromJson(const Json& json);

struct ReportMeta {
  std::string protocol;
  std::string level;
  bool recognition = true;
  size_t documents = 1;
};

Json ToJson(const EvalReport& report, const ReportMeta& meta);

}  // namespace hts

#endif  // HTS_JSON_IO_H_
