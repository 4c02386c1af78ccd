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

#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "hts/errors.h"
#include "hts/fixture.h"
#include "hts/json_io.h"

namespace hts {
namespace {

namespace fs = std::filesystem;

TEST(JsonIoTest, DetectionsRoundTrip) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Fixture f = GenerateFixture({.seed = seed, .confidence_noise = 0.2, .box_jitter_px = 2});
    for (const DetectionsDocument* d : {&f.perfect, &f.noisy}) {
      const Json j = ToJson(*d);
      EXPECT_EQ(DetectionsFromJson(j), *d);
      EXPECT_EQ(DetectionsFromJson(Json::parse(j.dump())), *d);
    }
  }
}

TEST(JsonIoTest, HierarchyRoundTrip) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Fixture f = GenerateFixture({.seed = seed});
    const Json j = ToJson(f.ground_truth, "ground_truth", "img.pgm");
    EXPECT_EQ(j["kind"], "ground_truth");
    EXPECT_EQ(j["image_ref"], "img.pgm");
    EXPECT_EQ(HierDocumentFromJson(Json::parse(j.dump())), f.ground_truth);
  }
}

TEST(JsonIoTest, FileRoundTripAndErrors) {
  const fs::path dir = fs::temp_directory_path() / "hts_json_io_test";
  fs::create_directories(dir);
  const Fixture f = GenerateFixture({.seed = 5});
  WriteJsonFile(ToJson(f.perfect), dir / "d.json");
  EXPECT_EQ(DetectionsFromJson(ReadJsonFile(dir / "d.json")), f.perfect);
  EXPECT_THROW(ReadJsonFile(dir / "missing.json"), IoError);
  std::ofstream(dir / "bad.json") << "{ not json";
  EXPECT_THROW(ReadJsonFile(dir / "bad.json"), ValidationError);
  EXPECT_THROW(WriteJsonFile(Json::object(), dir / "no" / "dir" / "x.json"), IoError);
  fs::remove_all(dir);
}

class JsonRejectTest : public ::testing::Test {
 protected:
  void SetUp() override { json_ = ToJson(GenerateFixture({.seed = 6}).perfect); }
  Json json_;
};

TEST_F(JsonRejectTest, WrongControlPointCount) {
  json_["detections"]["control_points"][0].erase(0);
  EXPECT_THROW(DetectionsFromJson(json_), ValidationError);
}

TEST_F(JsonRejectTest, AsymmetricAffinity) {
  Json& aff = json_["detections"]["affinity"];
  ASSERT_GE(aff.size(), 2u);
  aff[0][1] = 0.9;
  aff[1][0] = 0.1;
  EXPECT_THROW(DetectionsFromJson(json_), ValidationError);
}

TEST_F(JsonRejectTest, OutOfRangeConfidences) {
  Json line = json_;
  line["detections"]["confidences"][0] = 1.5;
  EXPECT_THROW(DetectionsFromJson(line), ValidationError);
  Json chr = json_;
  chr["recognitions"][0]["chars"][0]["confidence"] = -0.1;
  EXPECT_THROW(DetectionsFromJson(chr), ValidationError);
}

TEST_F(JsonRejectTest, UnknownSchemaVersionAndMismatchedLists) {
  Json v = json_;
  v["schema_version"] = "hts-geom/99";
  EXPECT_THROW(DetectionsFromJson(v), ValidationError);
  Json m = json_;
  m["detections"]["confidences"].erase(0);
  EXPECT_THROW(DetectionsFromJson(m), ValidationError);
}

TEST_F(JsonRejectTest, CoordinatesFarOutsideImage) {
  json_["detections"]["control_points"][0][0][0] = 3.0;
  EXPECT_THROW(DetectionsFromJson(json_), ValidationError);
}

TEST(JsonIoTest, ReportFields) {
  const EvalReport r = EvalReport::FromCounts({3, 1, 1, 2.7}, true);
  const Json j = ToJson(r, {"hiertext", "word", true, 4});
  EXPECT_EQ(j["kind"], "report");
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["tp"], 3);
  EXPECT_EQ(j["fp"], 1);
  EXPECT_EQ(j["fn"], 1);
  EXPECT_EQ(j["documents"], 4);
  EXPECT_EQ(j["pq"].get<double>(), *r.pq);
  EXPECT_EQ(j["f1"].get<double>(), r.f1);
  const Json icdar = ToJson(EvalReport::FromCounts({1, 0, 0, 1.0}, false), {"icdar", "word", true, 1});
  EXPECT_FALSE(icdar.contains("pq"));
}

}  // namespace
}  // namespace hts
