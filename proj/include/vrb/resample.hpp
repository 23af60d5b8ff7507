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

#include "vrb/image.hpp"

namespace vrb {

// Corner-aligned bilinear resampling: destination corners map onto source
// corners; a 1-pixel destination axis samples the source axis midpoint.
FloatImage resize_bilinear(const FloatImage& img, int new_w, int new_h);
PixelBuffer resize_bilinear(const PixelBuffer& img, int new_w, int new_h);

/// Bilinear sample with coordinates clamped to the image rectangle.
double sample_bilinear(const FloatImage& img, double x, double y, int c);

/// Center-crop to ceil(size/factor) and resize back to the original size.
/// factor 1 is the identity.
FloatImage center_zoom(const FloatImage& img, double factor);

FloatImage rotate180(const FloatImage& img);

/// Backward warp: out(x,y) = img(x + dx(x,y), y + dy(x,y)), bilinear,
/// clamped at the borders. dx/dy are single-channel fields of the same size.
FloatImage warp_bilinear(const FloatImage& img, const FloatImage& dx,
                         const FloatImage& dy);

}  // namespace vrb
