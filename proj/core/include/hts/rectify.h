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

// Rectified line crops and the crop <-> image coordinate bijection.
//
// A crop point (u, v) of a crop_width x crop_height patch maps to
//   (1 - r) * top(t) + r * bottom(t),  t = u / crop_width, r = v / crop_height
// in normalized image coordinates, then scaled by the image size to pixels.
// The crop x axis is parameter-uniform in t. Pixel (i, j) of either image
// covers [i, i+1) x [j, j+1), so its center is (i + 0.5, j + 0.5).

#ifndef HTS_RECTIFY_H_
#define HTS_RECTIFY_H_

#include "hts/bezier.h"
#include "hts/geometry.h"
#include "hts/image.h"

namespace hts {

inline constexpr int kDefaultCropHeight = 40;
inline constexpr int kDefaultMaxCropWidth = 1024;
// Accepted distance between a point and its round-tripped image.
inline constexpr double kInverseTolerancePx = 0.25;

class CropMapping {
 public:
  // Throws DomainError unless both crop sizes and the image size are >= 1.
  CropMapping(BezierLinePolygon polygon, int crop_width, int crop_height,
              ImageSize image_size);

  const BezierLinePolygon& polygon() const { return polygon_; }
  int crop_width() const { return crop_width_; }
  int crop_height() const { return crop_height_; }
  ImageSize image_size() const { return image_size_; }

  friend bool operator==(const CropMapping&, const CropMapping&) = default;

 private:
  BezierLinePolygon polygon_;
  int crop_width_;
  int crop_height_;
  ImageSize image_size_;
};

struct RectifiedCrop {
  GrayImage image;
  CropMapping mapping;
};

// round(crop_height * midline arc length / mean top-bottom distance), both
// measured in image pixels, clamped to [1, max_width].
// Throws DegenerateError when the mean height is zero.
int ComputeCropWidth(const BezierLinePolygon& poly, ImageSize image_size,
                     int crop_height, int max_width = kDefaultMaxCropWidth);

// Crop pixels to image pixels. Throws DomainError outside the crop.
Point2 CropToImage(const CropMapping& mapping, Point2 p);

// Numerical inverse of CropToImage. Throws NoPreimageError when q is
// farther than kInverseTolerancePx from the line region, NumericalError when
// the root find does not reach that tolerance.
Point2 ImageToCrop(const CropMapping& mapping, Point2 q);

// Bilinear resampling of the line region; samples outside the image are 0.
// Throws DegenerateError for a zero-height line.
RectifiedCrop CropRectify(const GrayImage& image, const BezierLinePolygon& poly,
                          int crop_height = kDefaultCropHeight,
                          int max_width = kDefaultMaxCropWidth);

// Maps the corners of a crop-pixel box to image pixels, (tl, tr, br, bl).
Quad ProjectBox(const CropMapping& mapping, const Box& box);

}  // namespace hts

#endif  // HTS_RECTIFY_H_
