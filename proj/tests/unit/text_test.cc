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

#include <string>

#include <gtest/gtest.h>

#include "hts/text.h"

namespace hts {
namespace {

TEST(Utf8Test, RoundTripsAcrossEncodingLengths) {
  const std::u32string s = U"aé€\U0001F600";
  const std::string bytes = Utf8Encode(s);
  EXPECT_EQ(bytes.size(), 1u + 2 + 3 + 4);
  EXPECT_EQ(Utf8Decode(bytes), s);
  EXPECT_EQ(Utf8Encode(U'é'), "\xc3\xa9");
}

TEST(Utf8Test, MalformedBytesBecomeReplacementCharacters) {
  EXPECT_EQ(Utf8Decode("a\xc3"), U"a\uFFFD");
  EXPECT_EQ(Utf8Decode("\xff" "b"), U"\uFFFDb");
  EXPECT_EQ(Utf8Decode("\xe2\x82" "c"), U"\uFFFD\uFFFDc");
}

}  // namespace
}  // namespace hts
