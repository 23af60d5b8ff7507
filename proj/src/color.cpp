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

#include "vrb/color.hpp"

#include <algorithm>
#include <cmath>

namespace vrb {

Hsv rgb_to_hsv(double r, double g, double b) {
  const double maxc = std::max({r, g, b});
  const double minc = std::min({r, g, b});
  const double delta = maxc - minc;

  Hsv out;
  out.v = maxc;
  if (maxc <= 0.0 || delta <= 0.0) {
    // black or achromatic: saturation 0, hue fixed at 0
    out.s = 0.0;
    out.h = 0.0;
    return out;
  }
  out.s = delta / maxc;

  double h;
  if (maxc == r) {
    h = (g - b) / delta;
  } else if (maxc == g) {
    h = 2.0 + (b - r) / delta;
  } else {
    h = 4.0 + (r - g) / delta;
  }
  h *= 60.0;
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  out.h = h;
  return out;
}

void hsv_to_rgb(const Hsv& hsv, double& r, double& g, double& b) {
  const double v = hsv.v;
  if (hsv.s <= 0.0) {
    r = g = b = v;
    return;
  }
  double h = hsv.h / 60.0;
  if (h >= 6.0) h -= 6.0;
  if (h < 0.0) h += 6.0;
  const int sector = std::min(5, static_cast<int>(h));
  const double f = h - sector;
  const double p = v * (1.0 - hsv.s);
  const double q = v * (1.0 - hsv.s * f);
  const double t = v * (1.0 - hsv.s * (1.0 - f));

  switch (sector) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    default: r = v; g = p; b = q; break;
  }
}

HsvBuffer rgb_to_hsv(const PixelBuffer& img) {
  HsvBuffer out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out.at(x, y) = rgb_to_hsv(img.at(x, y, 0) / 255.0, img.at(x, y, 1) / 255.0,
                                img.at(x, y, 2) / 255.0);
    }
  }
  return out;
}

PixelBuffer hsv_to_rgb(const HsvBuffer& img) {
  PixelBuffer out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      double r, g, b;
      hsv_to_rgb(img.at(x, y), r, g, b);
      out.at(x, y, 0) = quantize_unit(r);
      out.at(x, y, 1) = quantize_unit(g);
      out.at(x, y, 2) = quantize_unit(b);
    }
  }
  return out;
}

}  // namespace vrb
