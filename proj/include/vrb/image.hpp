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

#pragma once

#include <cstdint>
#include <vector>

namespace vrb {

/// 8-bit RGB raster, interleaved row-major. Stored intensities are always
/// in [0,255]; heavy processing happens on FloatImage and is quantized back
/// exactly once.
class PixelBuffer {
 public:
  static constexpr int kChannels = 3;

  PixelBuffer(int width, int height);  // zero-filled (black)

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * height_;
  }

  uint8_t& at(int x, int y, int c) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * kChannels + c];
  }
  uint8_t at(int x, int y, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * kChannels + c];
  }

  const std::vector<uint8_t>& data() const { return data_; }
  std::vector<uint8_t>& data() { return data_; }

  bool operator==(const PixelBuffer& other) const = default;

 private:
  int width_;
  int height_;
  std::vector<uint8_t> data_;
};

/// Working representation: real-valued intensities on a [0,1] scale,
/// 1 or 3 channels. Values may leave [0,1] mid-pipeline; quantize() clamps.
class FloatImage {
 public:
  FloatImage(int width, int height, int channels);

  static FloatImage from_pixels(const PixelBuffer& px);
  PixelBuffer to_pixels() const;  // clamp to [0,1], round half away from zero

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }

  double& at(int x, int y, int c = 0) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  double at(int x, int y, int c = 0) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  /// Mean over all pixels and channels.
  double mean() const;

 private:
  int width_;
  int height_;
  int channels_;
  std::vector<double> data_;
};

/// [0,1] clamp + round half away from zero to an 8-bit intensity.
uint8_t quantize_unit(double v);

}  // namespace vrb
