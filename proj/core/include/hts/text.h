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

#ifndef HTS_TEXT_H_
#define HTS_TEXT_H_

#include <string>
#include <string_view>

namespace hts {

// Invalid sequences decode to U+FFFD, one per offending byte.
std::u32string Utf8Decode(std::string_view s);
std::string Utf8Encode(std::u32string_view s);
std::string Utf8Encode(char32_t c);

}  // namespace hts

#endif  // HTS_TEXT_H_
