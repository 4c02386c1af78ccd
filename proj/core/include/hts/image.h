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

#ifndef HTS_IMAGE_H_
#define HTS_IMAGE_H_

#include <filesystem>
#include <vector>

namespace hts {

struct ImageSize {
  int width = 0;
  int height = 0;
  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

// Row-major grayscale image with intensities in [0, 1].
class GrayImage {
 public:
  GrayImage() = default;
  // Throws DomainError on negative dimensions.
  GrayImage(int width, int height, float fill = 0.0f);
  // Throws DomainError when pixels.size() != width * height.
  GrayImage(int width, int height, std::vector<float> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  ImageSize size() const { return {width_, height_}; }
  bool empty() const { return pixels_.empty(); }

  float at(int x, int y) const { return pixels_[y * width_ + x]; }
  float& at(int x, int y) { return pixels_[y * width_ + x]; }
  const std::vector<float>& pixels() const { return pixels_; }

  // Value at continuous pixel-center coordinates (x, y): pixel (i, j) sits
  // at (i, j). Neighbours outside the image read as 0.
  float SampleBilinear(double x, double y) const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<float> pixels_;
};

// 8-bit binary PGM (P5). Throws IoError / ValidationError.
GrayImage ReadPgm(const std::filesystem::path& path);
void WritePgm(const GrayImage& image, const std::filesystem::path& path);

// PNG, converted to luma with ITU-R 601 weights when the file has color.
GrayImage ReadPng(const std::filesystem::path& path);
void WritePng(const GrayImage& image, const std::filesystem::path& path);

// Dispatch on the extension (.pgm or .png).
GrayImage ReadImage(const std::filesystem::path& path);
void WriteImage(const GrayImage& image, const std::filesystem::path& path);

}  // namespace hts

#endif  // HTS_IMAGE_H_
