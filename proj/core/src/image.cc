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

#include "hts/image.h"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "hts/errors.h"

namespace hts {

namespace {

unsigned char ToByte(float v) {
  return static_cast<unsigned char>(
      std::lround(std::clamp(v, 0.0f, 1.0f) * 255.0f));
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Skips whitespace and '#' comments in a PNM header.
void SkipPnmSpace(std::istream& in) {
  while (true) {
    const int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

int ReadPnmInt(std::istream& in, const std::filesystem::path& path) {
  SkipPnmSpace(in);
  int v = -1;
  in >> v;
  if (!in || v < 0) throw ValidationError("bad PGM header in " + path.string());
  return v;
}

}  // namespace

GrayImage::GrayImage(int width, int height, float fill)
    : width_(width), height_(height) {
  if (width < 0 || height < 0) throw DomainError("negative image size");
  pixels_.assign(static_cast<size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<float> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 0 || height < 0) throw DomainError("negative image size");
  if (pixels_.size() != static_cast<size_t>(width) * height) {
    throw DomainError("pixel count does not match image size");
  }
}

float GrayImage::SampleBilinear(double x, double y) const {
  const double fx = std::floor(x);
  const double fy = std::floor(y);
  const double ax = x - fx;
  const double ay = y - fy;
  const long x0 = static_cast<long>(fx);
  const long y0 = static_cast<long>(fy);
  auto px = [&](long xi, long yi) -> double {
    if (xi < 0 || yi < 0 || xi >= width_ || yi >= height_) return 0.0;
    return pixels_[yi * width_ + xi];
  };
  double v = 0.0;
  if (ax < 1.0 && ay < 1.0) v += (1 - ax) * (1 - ay) * px(x0, y0);
  if (ax > 0.0) v += ax * (1 - ay) * px(x0 + 1, y0);
  if (ay > 0.0) v += (1 - ax) * ay * px(x0, y0 + 1);
  if (ax > 0.0 && ay > 0.0) v += ax * ay * px(x0 + 1, y0 + 1);
  return static_cast<float>(v);
}

GrayImage ReadPgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string magic;
  in >> magic;
  if (magic != "P5") throw ValidationError(path.string() + " is not a P5 PGM");
  const int w = ReadPnmInt(in, path);
  const int h = ReadPnmInt(in, path);
  const int maxval = ReadPnmInt(in, path);
  if (maxval <= 0 || maxval > 255) {
    throw ValidationError("only 8-bit PGM is supported: " + path.string());
  }
  in.get();
  std::vector<unsigned char> raw(static_cast<size_t>(w) * h);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
    throw ValidationError("truncated PGM data in " + path.string());
  }
  std::vector<float> px(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) px[i] = raw[i] / static_cast<float>(maxval);
  return GrayImage(w, h, std::move(px));
}

void WritePgm(const GrayImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << "P5\n" << image.width() << " " << image.height() << "\n255\n";
  std::vector<unsigned char> raw(image.pixels().size());
  std::transform(image.pixels().begin(), image.pixels().end(), raw.begin(), ToByte);
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

GrayImage ReadPng(const std::filesystem::path& path) {
  png_image img{};
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&img, path.c_str())) {
    const std::string msg = img.message;
    if (!std::filesystem::exists(path)) throw IoError("cannot open " + path.string());
    throw ValidationError("bad PNG " + path.string() + ": " + msg);
  }
  // libpng's gray conversion uses sRGB-linear weights; convert from RGB
  // ourselves to keep the 601 luma coefficients.
  img.format = PNG_FORMAT_RGB;
  std::vector<unsigned char> raw(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, raw.data(), 0, nullptr)) {
    png_image_free(&img);
    throw ValidationError("bad PNG data in " + path.string());
  }
  const int w = static_cast<int>(img.width);
  const int h = static_cast<int>(img.height);
  std::vector<float> px(static_cast<size_t>(w) * h);
  for (size_t i = 0; i < px.size(); ++i) {
    const double y = 0.299 * raw[3 * i] + 0.587 * raw[3 * i + 1] + 0.114 * raw[3 * i + 2];
    px[i] = static_cast<float>(y / 255.0);
  }
  return GrayImage(w, h, std::move(px));
}

void WritePng(const GrayImage& image, const std::filesystem::path& path) {
  png_image img{};
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(image.width());
  img.height = static_cast<png_uint_32>(image.height());
  img.format = PNG_FORMAT_GRAY;
  std::vector<unsigned char> raw(image.pixels().size());
  std::transform(image.pixels().begin(), image.pixels().end(), raw.begin(), ToByte);
  if (!png_image_write_to_file(&img, path.c_str(), 0, raw.data(), 0, nullptr)) {
    throw IoError("cannot write " + path.string() + ": " + img.message);
  }
}

GrayImage ReadImage(const std::filesystem::path& path) {
  const std::string ext = Lower(path.extension().string());
  if (ext == ".png") return ReadPng(path);
  if (ext == ".pgm") return ReadPgm(path);
  throw ValidationError("unsupported image format: " + path.string());
}

void WriteImage(const GrayImage& image, const std::filesystem::path& path) {
  const std::string ext = Lower(path.extension().string());
  if (ext == ".png") return WritePng(image, path);
  if (ext == ".pgm") return WritePgm(image, path);
  throw ValidationError("unsupported image format: " + path.string());
}

}  // namespace hts
