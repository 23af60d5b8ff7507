// Copyright 2026 The vrb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vrb/image.hpp"

#include <algorithm>
#include <cmath>

#include "vrb/error.hpp"

namespace vrb {

PixelBuffer::PixelBuffer(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw Error("PixelBuffer dimensions must be >= 1");
  }
  data_.assign(static_cast<std::size_t>(width) * height * kChannels, 0);
}

FloatImage::FloatImage(int width, int height, int channels)
    : width_(width), height_(height), channels_(channels) {
  if (width < 1 || height < 1 || (channels != 1 && channels != 3)) {
    throw Error("FloatImage requires positive dimensions and 1 or 3 channels");
  }
  data_.assign(static_cast<std::size_t>(width) * height * channels, 0.0);
}

FloatImage FloatImage::from_pixels(const PixelBuffer& px) {
  FloatImage img(px.width(), px.height(), PixelBuffer::kChannels);
  const auto& src = px.data();
  for (std::size_t i = 0; i < src.size(); ++i) {
    img.data_[i] = src[i] / 255.0;
  }
  return img;
}

PixelBuffer FloatImage::to_pixels() const {
  if (channels_ != 3) {
    throw Error("to_pixels requires a 3-channel image");
  }
  PixelBuffer px(width_, height_);
  auto& dst = px.data();
  for (std::size_t i = 0; i < data_.size(); ++i) {
    dst[i] = quantize_unit(data_[i]);
  }
  return px;
}

double FloatImage::mean() const {
  double sum = 0.0;
  for (double v : data_) sum += v;
  return sum / static_cast<double>(data_.size());
}

uint8_t quantize_unit(double v) {
  const double clamped = std::clamp(v, 0.0, 1.0);
  return static_cast<uint8_t>(std::lround(clamped * 255.0));
}

}  // namespace vrb
