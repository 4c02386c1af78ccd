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
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "hts/errors.h"
#include "hts/image.h"

namespace hts {
namespace {

namespace fs = std::filesystem;

class ImageIoTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hts_image_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static GrayImage Random(int w, int h) {
    std::mt19937_64 rng(static_cast<uint64_t>(w * 1000 + h));
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) img.at(x, y) = static_cast<float>(rng() % 256) / 255.0f;
    }
    return img;
  }

  fs::path dir_;
};

TEST_F(ImageIoTest, PgmRoundTripIsExactOnEightBitValues) {
  const GrayImage img = Random(37, 19);
  WritePgm(img, dir_ / "a.pgm");
  EXPECT_EQ(ReadPgm(dir_ / "a.pgm"), img);
  EXPECT_EQ(ReadImage(dir_ / "a.pgm"), img);
}

TEST_F(ImageIoTest, PngRoundTripIsExactOnEightBitValues) {
  const GrayImage img = Random(23, 41);
  WritePng(img, dir_ / "a.png");
  EXPECT_EQ(ReadPng(dir_ / "a.png"), img);
  WriteImage(img, dir_ / "b.png");
  EXPECT_EQ(ReadImage(dir_ / "b.png"), img);
}

TEST_F(ImageIoTest, ValuesAreClampedAndQuantized) {
  GrayImage img(3, 1);
  img.at(0, 0) = -0.5f;
  img.at(1, 0) = 2.0f;
  img.at(2, 0) = 0.5f;
  WritePgm(img, dir_ / "c.pgm");
  const GrayImage back = ReadPgm(dir_ / "c.pgm");
  EXPECT_EQ(back.at(0, 0), 0.0f);
  EXPECT_EQ(back.at(1, 0), 1.0f);
  EXPECT_EQ(back.at(2, 0), 128.0f / 255);
}

TEST_F(ImageIoTest, UnreadableFilesAreIoErrorsAndBadContentIsInvalid) {
  EXPECT_THROW(ReadPgm(dir_ / "missing.pgm"), IoError);
  EXPECT_THROW(ReadPng(dir_ / "missing.png"), IoError);
  std::ofstream(dir_ / "bad.pgm") << "P2\n1 1\n255\n0\n";
  EXPECT_THROW(ReadPgm(dir_ / "bad.pgm"), ValidationError);
  std::ofstream(dir_ / "bad.png") << "not a png";
  EXPECT_THROW(ReadPng(dir_ / "bad.png"), ValidationError);
  EXPECT_THROW(WritePgm(GrayImage(1, 1), dir_ / "no" / "such" / "dir.pgm"), IoError);
}

TEST(GrayImageTest, ConstructionAndBilinear) {
  EXPECT_THROW(GrayImage(-1, 2), DomainError);
  EXPECT_THROW(GrayImage(2, 2, std::vector<float>(3)), DomainError);
  const GrayImage img(2, 1, std::vector<float>{0.0f, 1.0f});
  EXPECT_FLOAT_EQ(img.SampleBilinear(0.25, 0), 0.25f);
  EXPECT_FLOAT_EQ(img.SampleBilinear(1, 0), 1.0f);
  // Neighbours outside the image read as 0.
  EXPECT_FLOAT_EQ(img.SampleBilinear(1, 0.5), 0.5f);
  EXPECT_FLOAT_EQ(img.SampleBilinear(-1, 0), 0.0f);
}

}  // namespace
}  // namespace hts
