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

#ifndef HTS_SVG_H_
#define HTS_SVG_H_

#include <filesystem>
#include <string>

#include "hts/hierarchy.h"

namespace hts {

// SVG 1.1 overlay: a background rect, filled character quads colored by
// paragraph, then word, line and paragraph outlines. Exactly one <polygon>
// per entity, so the polygon count is chars + words + lines + paragraphs.
std::string RenderSvg(const HierDocument& doc);

// Throws IoError when the file cannot be written.
void WriteSvg(const HierDocument& doc, const std::filesystem::path& out);

}  // namespace hts

#endif  // HTS_SVG_H_
