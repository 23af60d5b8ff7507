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

#include "vrb/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "vrb/error.hpp"

namespace vrb {
namespace {

constexpr double kPi = 3.14159265358979323846;

int clamp_coord(int v, int lo, int hi) { return std::clamp(v, lo, hi); }

std::vector<double> gaussian_taps(double sigma, int radius) {
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(i * i) / (2.0 * sigma * sigma));
    taps[i + radius] = w;
    sum += w;
  }
  for (double& w : taps) w /= sum;
  return taps;
}

}  // namespace

Kernel::Kernel(int size) : size_(size) {
  if (size < 1 || size % 2 == 0) {
    throw Error("kernel size must be odd and >= 1");
  }
  w_.assign(static_cast<std::size_t>(size) * size, 0.0);
}

double Kernel::sum() const {
  double s = 0.0;
  for (double w : w_) s += w;
  return s;
}

void Kernel::normalize() {
  const double s = sum();
  if (s == 0.0) throw Error("cannot normalize a zero kernel");
  for (double& w : w_) w /= s;
}

Kernel disk_kernel(double radius, double alias_blur) {
  if (radius <= 0.0) throw Error("disk kernel radius must be > 0");
  const int r = std::max(1, static_cast<int>(std::ceil(radius)));
  Kernel k(2 * r + 1);
  for (int j = -r; j <= r; ++j) {
    for (int i = -r; i <= r; ++i) {
      if (i * i + j * j <= radius * radius) k.at(i, j) = 1.0;
    }
  }
  k.normalize();
  if (alias_blur > 0.0) {
    // smooth the indicator edges: convolve the kernel with a small Gaussian
    const Kernel g = gaussian_kernel(alias_blur);
    const int gr = g.radius();
    Kernel smoothed(k.size());
    for (int j = -r; j <= r; ++j) {
      for (int i = -r; i <= r; ++i) {
        double acc = 0.0;
        for (int gj = -gr; gj <= gr; ++gj) {
          for (int gi = -gr; gi <= gr; ++gi) {
            const int si = i - gi;
            const int sj = j - gj;
            if (si < -r || si > r || sj < -r || sj > r) continue;
            acc += k.at(si, sj) * g.at(gi, gj);
          }
        }
        smoothed.at(i, j) = acc;
      }
    }
    smoothed.normalize();
    return smoothed;
  }
  return k;
}

Kernel gaussian_kernel(double sigma) {
  if (sigma <= 0.0) throw Error("gaussian kernel sigma must be > 0");
  const int r = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  Kernel k(2 * r + 1);
  for (int j = -r; j <= r; ++j) {
    for (int i = -r; i <= r; ++i) {
      k.at(i, j) = std::exp(-(i * i + j * j) / (2.0 * sigma * sigma));
    }
  }
  k.normalize();
  return k;
}

Kernel motion_kernel(int length, double sigma, double angle_deg) {
  if (length < 1) throw Error("motion kernel length must be >= 1");
  const int r = (length + 1) / 2;
  Kernel k(2 * r + 1);
  const double rad = angle_deg * kPi / 180.0;
  const double dx = std::cos(rad);
  const double dy = std::sin(rad);
  // sample the segment densely and splat onto the nearest cell
  const int steps = 4 * length + 1;
  const double half = (length - 1) / 2.0;
  for (int s = 0; s < steps; ++s) {
    const double t = -half + (2.0 * half) * s / (steps - 1 == 0 ? 1 : steps - 1);
    const int ix = static_cast<int>(std::lround(t * dx));
    const int iy = static_cast<int>(std::lround(t * dy));
    if (ix < -r || ix > r || iy < -r || iy > r) continue;
    const double w =
        sigma > 0.0 ? std::exp(-(t * t) / (2.0 * sigma * sigma)) : 1.0;
    k.at(ix, iy) = std::max(k.at(ix, iy), w);
  }
  k.normalize();
  return k;
}

FloatImage convolve(const FloatImage& img, const Kernel& k) {
  const int w = img.width();
  const int h = img.height();
  const int ch = img.channels();
  const int r = k.radius();
  FloatImage out(w, h, ch);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int j = -r; j <= r; ++j) {
          const int sy = clamp_coord(y - j, 0, h - 1);
          for (int i = -r; i <= r; ++i) {
            const int sx = clamp_coord(x - i, 0, w - 1);
            acc += img.at(sx, sy, c) * k.at(i, j);
          }
        }
        out.at(x, y, c) = acc;
      }
    }
  }
  return out;
}

FloatImage gaussian_blur(const FloatImage& img, double sigma) {
  if (sigma <= 0.0) return img;
  const int r = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  const std::vector<double> taps = gaussian_taps(sigma, r);
  const int w = img.width();
  const int h = img.height();
  const int ch = img.channels();

  FloatImage tmp(w, h, ch);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int i = -r; i <= r; ++i) {
          acc += img.at(clamp_coord(x + i, 0, w - 1), y, c) * taps[i + r];
        }
        tmp.at(x, y, c) = acc;
      }
    }
  }
  FloatImage out(w, h, ch);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int i = -r; i <= r; ++i) {
          acc += tmp.at(x, clamp_coord(y + i, 0, h - 1), c) * taps[i + r];
        }
        out.at(x, y, c) = acc;
      }
    }
  }
  return out;
}

}  // namespace vrb
