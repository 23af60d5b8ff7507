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

/// Odd-sized square convolution kernel.
class Kernel {
 public:
  explicit Kernel(int size);  // zero weights, size must be odd and >= 1

  int size() const { return size_; }
  int radius() const { return size_ / 2; }

  // (i, j) are offsets in [-radius, radius]
  double& at(int i, int j) {
    return w_[static_cast<std::size_t>(j + radius()) * size_ + (i + radius())];
  }
  double at(int i, int j) const {
    return w_[static_cast<std::size_t>(j + radius()) * size_ + (i + radius())];
  }

  double sum() const;
  void normalize();  // scale so weights sum to 1; error on zero sum

 private:
  int size_;
  std::vector<double> w_;
};

/// Centered disk indicator of the given radius, normalized to sum 1, then
/// lightly smoothed by a Gaussian of width alias_blur (0 disables smoothing)
/// and re-normalized.
Kernel disk_kernel(double radius, double alias_blur);

/// Normalized 2-D Gaussian, truncated at 3 sigma (minimum size 3x3).
Kernel gaussian_kernel(double sigma);

/// Gaussian-weighted line segment through the center at the given angle
/// (degrees, 0 = +x axis), length pixels long, normalized to sum 1.
Kernel motion_kernel(int length, double sigma, double angle_deg);

/// Channel-wise 2-D convolution with edge replication at the borders.
FloatImage convolve(const FloatImage& img, const Kernel& k);

/// Separable Gaussian smoothing, edge replication; sigma <= 0 is a copy.
FloatImage gaussian_blur(const FloatImage& img, double sigma);

}  // namespace vrb
