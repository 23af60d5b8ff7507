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

#include <vector>

#include "vrb/image.hpp"

namespace vrb {

/// One HSV triple: hue in degrees [0,360), saturation and value in [0,1].
/// Achromatic pixels get hue 0 by convention.
struct Hsv {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

/// HSV raster matching the spatial dimensions of its RGB source.
class HsvBuffer {
 public:
  HsvBuffer(int width, int height)
      : width_(width), height_(height),
        data_(static_cast<std::size_t>(width) * height) {}

  int width() const { return width_; }
  int height() const { return height_; }

  Hsv& at(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  const Hsv& at(int x, int y) const {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

 private:
  int width_;
  int height_;
  std::vector<Hsv> data_;
};

// Scalar hexcone conversions on [0,1] components. The round trip
// rgb -> hsv -> rgb is exact for every 8-bit color (tested exhaustively).
Hsv rgb_to_hsv(double r, double g, double b);
void hsv_to_rgb(const Hsv& hsv, double& r, double& g, double& b);

HsvBuffer rgb_to_hsv(const PixelBuffer& img);
PixelBuffer hsv_to_rgb(const HsvBuffer& img);

}  // namespace vrb
