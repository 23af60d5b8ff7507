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
#include <string>
#include <string_view>
#include <vector>

#include "vrb/image.hpp"
#include "vrb/rng.hpp"
#include "vrb/severity.hpp"

namespace vrb {

// ---------------------------------------------------------------------------
// Corruption functions. All operate on [0,1] float intensities; apply()
// quantizes exactly once at the end. Stochastic functions consume a caller
// provided stream, so identical (seed, spec) gives identical output.
// ---------------------------------------------------------------------------

FloatImage gaussian_noise(const FloatImage& img, double sigma, RngStream& rng);

/// Additive Poisson: r + P(lambda) / scale, per pixel and channel.
/// The draw is in count units; dividing by scale converts to intensity.
/// Mean shifts up by lambda/scale (inherent to the additive form).
FloatImage shot_noise_additive(const FloatImage& img, double lambda,
                               double scale, RngStream& rng);

/// Alternative signal-dependent form: r' = P(r * photon_scale) / photon_scale.
FloatImage shot_noise_signal(const FloatImage& img, double photon_scale,
                             RngStream& rng);

FloatImage speckle_noise(const FloatImage& img, double sigma, RngStream& rng);

enum class ImpulseVariant { kSaltPepper, kRandomValued };

/// Each pixel is hit with probability `amount`; a hit sets all channels to
/// 0 or 1 with equal odds (salt & pepper) or to one uniform draw from [0,1].
FloatImage impulse_noise(const FloatImage& img, double amount,
                         ImpulseVariant variant, RngStream& rng);

FloatImage color_invert(const FloatImage& img);

/// threshold8 is in 8-bit units; r > threshold maps to 1, else 0 (strict).
FloatImage binary_threshold(const FloatImage& img, double threshold8);

FloatImage brightness(const FloatImage& img, double shift);
FloatImage saturation(const FloatImage& img, double factor, double shift);
FloatImage contrast(const FloatImage& img, double factor);
FloatImage grayscale(const FloatImage& img, bool invert);

FloatImage defocus_blur(const FloatImage& img, double radius, double alias_blur);
FloatImage zoom_blur(const FloatImage& img, double max_zoom, double zoom_step);
FloatImage glass_blur(const FloatImage& img, double sigma, int max_delta,
                      int iterations, RngStream& rng);

struct SnowParams {
  double layer_mean = 0.0;
  double layer_sigma = 0.0;
  double layer_zoom = 1.0;
  double threshold = 0.5;
  int blur_length = 1;
  double blur_sigma = 0.0;
  double blend = 1.0;  // weight on the original in the whitening blend
};
FloatImage snow(const FloatImage& img, const SnowParams& p, RngStream& rng);

struct SplatterParams {
  double density = 0.0;  // mean of the noise field; 0 disables the layer
  double field_sigma = 0.3;
  double smooth_sigma = 3.0;
  double threshold = 0.69;
  double soften_sigma = 0.6;
  double color[3] = {0.686, 0.933, 0.933};
};
FloatImage splatter(const FloatImage& img, const SplatterParams& p,
                    RngStream& rng);

/// Smooth random displacement field (Gaussian-filtered uniform noise,
/// scaled to alpha pixels) applied by backward bilinear warping.
FloatImage elastic(const FloatImage& img, double alpha, double sigma,
                   RngStream& rng);

FloatImage pixelate(const FloatImage& img, double factor);
FloatImage jpeg_compress(const FloatImage& img, int quality);

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct CorruptionSpec {
  std::string corruption;
  int level = 0;       // 0..5; 0 is the identity
  ParamRecord params;  // resolved severity record (unused at level 0)
  uint64_t seed = 0;   // stream root, already folded with the image key
};

struct CorruptionInfo {
  std::string id;
  bool stochastic = false;  // consumes the random stream
  bool benchmark = false;   // one of the 14 corruptions with published results
  FloatImage (*fn)(const FloatImage&, const ParamRecord&, RngStream&) = nullptr;
};

/// All 18 registered corruptions, in catalog order.
const std::vector<CorruptionInfo>& corruption_catalog();
const CorruptionInfo* find_corruption(std::string_view id);
std::vector<std::string> benchmark_corruption_ids();

/// Errors if the table lacks a registered corruption or names an unknown one.
void validate_table(const SeverityTable& table);

/// Resolve (corruption, level) against a table into a ready-to-apply spec.
CorruptionSpec resolve_spec(const std::string& corruption, int level,
                            const SeverityTable& table, uint64_t seed);

/// Dispatch. Level 0 returns a byte-identical copy of the input.
PixelBuffer apply(const CorruptionSpec& spec, const PixelBuffer& img);

}  // namespace vrb
