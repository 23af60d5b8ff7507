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

#include "vrb/resample.hpp"

#include <algorithm>
#include <cmath>

#include "vrb/error.hpp"

namespace vrb {
namespace {

double source_coord(int dst, int dst_size, int src_size) {
  if (dst_size == 1) return (src_size - 1) / 2.0;
  return dst * static_cast<double>(src_size - 1) / (dst_size - 1);
}

}  // namespace

double sample_bilinear(const FloatImage& img, double x, double y, int c) {
  const int w = img.width();
  const int h = img.height();
  x = std::clamp(x, 0.0, static_cast<double>(w - 1));
  y = std::clamp(y, 0.0, static_cast<double>(h - 1));
  const int x0 = static_cast<int>(x);
  const int y0 = static_cast<int>(y);
  const int x1 = std::min(x0 + 1, w - 1);
  const int y1 = std::min(y0 + 1, h - 1);
  const double fx = x - x0;
  const double fy = y - y0;
  const double top = img.at(x0, y0, c) * (1.0 - fx) + img.at(x1, y0, c) * fx;
  const double bot = img.at(x0, y1, c) * (1.0 - fx) + img.at(x1, y1, c) * fx;
  return top * (1.0 - fy) + bot * fy;
}

FloatImage resize_bilinear(const FloatImage& img, int new_w, int new_h) {
  if (new_w < 1 || new_h < 1) throw Error("resize target must be >= 1x1");
  FloatImage out(new_w, new_h, img.channels());
  for (int y = 0; y < new_h; ++y) {
    const double sy = source_coord(y, new_h, img.height());
    for (int x = 0; x < new_w; ++x) {
      const double sx = source_coord(x, new_w, img.width());
      for (int c = 0; c < img.channels(); ++c) {
        out.at(x, y, c) = sample_bilinear(img, sx, sy, c);
      }
    }
  }
  return out;
}

PixelBuffer resize_bilinear(const PixelBuffer& img, int new_w, int new_h) {
  return resize_bilinear(FloatImage::from_pixels(img), new_w, new_h).to_pixels();
}

FloatImage center_zoom(const FloatImage& img, double factor) {
  if (factor < 1.0) throw Error("center_zoom factor must be >= 1");
  const int w = img.width();
  const int h = img.height();
  const int cw = std::max(1, static_cast<int>(std::ceil(w / factor)));
  const int chh = std::max(1, static_cast<int>(std::ceil(h / factor)));
  const int left = (w - cw) / 2;
  const int top = (h - chh) / 2;
  FloatImage crop(cw, chh, img.channels());
  for (int y = 0; y < chh; ++y) {
    for (int x = 0; x < cw; ++x) {
      for (int c = 0; c < img.channels(); ++c) {
        crop.at(x, y, c) = img.at(left + x, top + y, c);
      }
    }
  }
  if (cw == w && chh == h) return crop;
  return resize_bilinear(crop, w, h);
}

FloatImage rotate180(const FloatImage& img) {
  FloatImage out(img.width(), img.height(), img.channels());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < img.channels(); ++c) {
        out.at(x, y, c) =
            img.at(img.width() - 1 - x, img.height() - 1 - y, c);
      }
    }
  }
  return out;
}

FloatImage warp_bilinear(const FloatImage& img, const FloatImage& dx,
                         const FloatImage& dy) {
  if (dx.width() != img.width() || dx.height() != img.height() ||
      dy.width() != img.width() || dy.height() != img.height()) {
    throw Error("displacement fields must match the image size");
  }
  FloatImage out(img.width(), img.height(), img.channels());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double sx = x + dx.at(x, y);
      const double sy = y + dy.at(x, y);
      for (int c = 0; c < img.channels(); ++c) {
        out.at(x, y, c) = sample_bilinear(img, sx, sy, c);
      }
    }
  }
  return out;
}

}  // namespace vrb
