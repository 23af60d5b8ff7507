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

#include "vrb/corruptions.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "vrb/color.hpp"
#include "vrb/error.hpp"
#include "vrb/imageio.hpp"
#include "vrb/kernel.hpp"
#include "vrb/resample.hpp"

namespace vrb {
namespace {

void require_rgb(const FloatImage& img, const char* op) {
  if (img.channels() != 3) {
    throw Error(std::string(op) + " requires a 3-channel image");
  }
}

}  // namespace

FloatImage gaussian_noise(const FloatImage& img, double sigma, RngStream& rng) {
  if (sigma < 0.0) throw Error("gaussian noise sigma must be >= 0");
  FloatImage out = img;
  if (sigma == 0.0) return out;
  for (double& v : out.data()) v += rng.normal(0.0, sigma);
  return out;
}

FloatImage shot_noise_additive(const FloatImage& img, double lambda,
                               double scale, RngStream& rng) {
  if (lambda < 0.0) throw Error("shot noise lambda must be >= 0");
  if (scale <= 0.0) throw Error("shot noise scale must be > 0");
  FloatImage out = img;
  if (lambda == 0.0) return out;
  for (double& v : out.data()) {
    v += static_cast<double>(rng.poisson(lambda)) / scale;
  }
  return out;
}

FloatImage shot_noise_signal(const FloatImage& img, double photon_scale,
                             RngStream& rng) {
  if (photon_scale <= 0.0) throw Error("photon scale must be > 0");
  FloatImage out = img;
  for (double& v : out.data()) {
    const double mean = std::max(0.0, v) * photon_scale;
    v = static_cast<double>(rng.poisson(mean)) / photon_scale;
  }
  return out;
}

FloatImage speckle_noise(const FloatImage& img, double sigma, RngStream& rng) {
  if (sigma < 0.0) throw Error("speckle noise sigma must be >= 0");
  FloatImage out = img;
  if (sigma == 0.0) return out;
  for (double& v : out.data()) v += v * rng.normal(0.0, sigma);
  return out;
}

FloatImage impulse_noise(const FloatImage& img, double amount,
                         ImpulseVariant variant, RngStream& rng) {
  if (amount < 0.0 || amount > 1.0) {
    throw Error("impulse noise probability must be in [0,1]");
  }
  FloatImage out = img;
  const int ch = out.channels();
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      if (rng.uniform() >= amount) continue;
      double value;
      if (variant == ImpulseVariant::kSaltPepper) {
        value = rng.uniform() < 0.5 ? 1.0 : 0.0;
      } else {
        value = rng.uniform();
      }
      for (int c = 0; c < ch; ++c) out.at(x, y, c) = value;
    }
  }
  return out;
}

FloatImage color_invert(const FloatImage& img) {
  FloatImage out = img;
  for (double& v : out.data()) v = 1.0 - v;
  return out;
}

FloatImage binary_threshold(const FloatImage& img, double threshold8) {
  if (threshold8 < 0.0 || threshold8 > 255.0) {
    throw Error("binary threshold must be in [0,255]");
  }
  const double t = threshold8 / 255.0;
  FloatImage out = img;
  for (double& v : out.data()) v = v > t ? 1.0 : 0.0;
  return out;
}

FloatImage brightness(const FloatImage& img, double shift) {
  require_rgb(img, "brightness");
  FloatImage out = img;
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      Hsv hsv = rgb_to_hsv(out.at(x, y, 0), out.at(x, y, 1), out.at(x, y, 2));
      hsv.v = std::clamp(hsv.v + shift, 0.0, 1.0);
      hsv_to_rgb(hsv, out.at(x, y, 0), out.at(x, y, 1), out.at(x, y, 2));
    }
  }
  return out;
}

FloatImage saturation(const FloatImage& img, double factor, double shift) {
  require_rgb(img, "saturation");
  FloatImage out = img;
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      Hsv hsv = rgb_to_hsv(out.at(x, y, 0), out.at(x, y, 1), out.at(x, y, 2));
      hsv.s = std::clamp(hsv.s * factor + shift, 0.0, 1.0);
      hsv_to_rgb(hsv, out.at(x, y, 0), out.at(x, y, 1), out.at(x, y, 2));
    }
  }
  return out;
}

FloatImage contrast(const FloatImage& img, double factor) {
  if (factor < 0.0) throw Error("contrast factor must be >= 0");
  // mean over all pixels and all channels jointly
  const double mean = img.mean();
  FloatImage out = img;
  for (double& v : out.data()) v = (v - mean) * factor + mean;
  return out;
}

FloatImage grayscale(const FloatImage& img, bool invert) {
  require_rgb(img, "grayscale");
  FloatImage out = img;
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      double m = (out.at(x, y, 0) + out.at(x, y, 1) + out.at(x, y, 2)) / 3.0;
      if (invert) m = 1.0 - m;
      out.at(x, y, 0) = out.at(x, y, 1) = out.at(x, y, 2) = m;
    }
  }
  return out;
}

FloatImage defocus_blur(const FloatImage& img, double radius, double alias_blur) {
  return convolve(img, disk_kernel(radius, alias_blur));
}

FloatImage zoom_blur(const FloatImage& img, double max_zoom, double zoom_step) {
  if (max_zoom < 1.0) throw Error("zoom blur max_zoom must be >= 1");
  if (zoom_step <= 0.0) throw Error("zoom blur step must be > 0");
  FloatImage acc = img;  // the original participates in the average
  int terms = 1;
  for (double z = 1.0; z <= max_zoom + 1e-9; z += zoom_step) {
    const FloatImage zoomed = center_zoom(img, z);
    for (std::size_t i = 0; i < acc.data().size(); ++i) {
      acc.data()[i] += zoomed.data()[i];
    }
    ++terms;
  }
  for (double& v : acc.data()) v /= terms;
  return acc;
}

FloatImage glass_blur(const FloatImage& img, double sigma, int max_delta,
                      int iterations, RngStream& rng) {
  if (sigma < 0.0) throw Error("glass blur sigma must be >= 0");
  if (max_delta < 0) throw Error("glass blur neighborhood must be >= 0");
  FloatImage out = img;
  const int w = out.width();
  const int h = out.height();
  const int ch = out.channels();
  if (max_delta > 0) {
    for (int it = 0; it < iterations; ++it) {
      for (int y = h - 1 - max_delta; y >= max_delta; --y) {
        for (int x = w - 1 - max_delta; x >= max_delta; --x) {
          const int dx = rng.uniform_int(-max_delta, max_delta);
          const int dy = rng.uniform_int(-max_delta, max_delta);
          for (int c = 0; c < ch; ++c) {
            std::swap(out.at(x, y, c), out.at(x + dx, y + dy, c));
          }
        }
      }
    }
  }
  if (sigma > 0.0) out = gaussian_blur(out, sigma);
  return out;
}

FloatImage snow(const FloatImage& img, const SnowParams& p, RngStream& rng) {
  require_rgb(img, "snow");
  const int w = img.width();
  const int h = img.height();

  // 1. Gaussian random layer
  FloatImage layer(w, h, 1);
  for (double& v : layer.data()) v = rng.normal(p.layer_mean, p.layer_sigma);

  // 2. zoom: enlarges the flakes
  if (p.layer_zoom > 1.0) layer = center_zoom(layer, p.layer_zoom);

  // 3. threshold: keep only the strong flakes
  for (double& v : layer.data()) {
    if (v < p.threshold) v = 0.0;
  }

  // 4. motion blur at a random diagonal angle
  const double angle = rng.uniform(-135.0, -45.0);
  if (p.blur_length > 1) {
    layer = convolve(layer, motion_kernel(p.blur_length, p.blur_sigma, angle));
  }

  // 5. blend the input with a whitened grayscale of itself
  FloatImage out = img;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double gray =
          (img.at(x, y, 0) + img.at(x, y, 1) + img.at(x, y, 2)) / 3.0;
      const double white = gray * 1.5 + 0.5;
      for (int c = 0; c < 3; ++c) {
        const double v = img.at(x, y, c);
        out.at(x, y, c) = p.blend * v + (1.0 - p.blend) * std::max(v, white);
      }
    }
  }

  // 6. add the snow layer and its 180-degree rotation
  const FloatImage flipped = rotate180(layer);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double add = layer.at(x, y) + flipped.at(x, y);
      for (int c = 0; c < 3; ++c) {
        out.at(x, y, c) = std::clamp(out.at(x, y, c) + add, 0.0, 1.0);
      }
    }
  }
  return out;
}

FloatImage splatter(const FloatImage& img, const SplatterParams& p,
                    RngStream& rng) {
  require_rgb(img, "splatter");
  if (p.density <= 0.0) return img;  // zero density disables the layer
  const int w = img.width();
  const int h = img.height();

  FloatImage field(w, h, 1);
  for (double& v : field.data()) v = rng.normal(p.density, p.field_sigma);
  field = gaussian_blur(field, p.smooth_sigma);

  // droplet mask from the thresholded smoothed field, edges feathered
  FloatImage mask(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      mask.at(x, y) = field.at(x, y) > p.threshold ? 1.0 : 0.0;
    }
  }
  mask = gaussian_blur(mask, p.soften_sigma);
  for (double& v : mask.data()) {
    if (v < 0.8) v = 0.0;
  }

  FloatImage out = img;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double m = std::min(1.0, mask.at(x, y));
      if (m <= 0.0) continue;
      for (int c = 0; c < 3; ++c) {
        out.at(x, y, c) = img.at(x, y, c) * (1.0 - m) + p.color[c] * m;
      }
    }
  }
  return out;
}

FloatImage elastic(const FloatImage& img, double alpha, double sigma,
                   RngStream& rng) {
  if (alpha < 0.0) throw Error("elastic alpha must be >= 0");
  const int w = img.width();
  const int h = img.height();
  FloatImage dx(w, h, 1);
  FloatImage dy(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      dx.at(x, y) = rng.uniform(-1.0, 1.0);
      dy.at(x, y) = rng.uniform(-1.0, 1.0);
    }
  }
  if (sigma > 0.0) {
    dx = gaussian_blur(dx, sigma);
    dy = gaussian_blur(dy, sigma);
  }
  // smoothing is a convex combination, so |field| <= alpha holds per axis
  for (double& v : dx.data()) v *= alpha;
  for (double& v : dy.data()) v *= alpha;
  return warp_bilinear(img, dx, dy);
}

FloatImage pixelate(const FloatImage& img, double factor) {
  if (factor <= 0.0 || factor > 1.0) {
    throw Error("pixelate factor must be in (0,1]");
  }
  const int dw = std::max(1, static_cast<int>(std::ceil(img.width() * factor)));
  const int dh = std::max(1, static_cast<int>(std::ceil(img.height() * factor)));
  if (dw == img.width() && dh == img.height()) return img;
  return resize_bilinear(resize_bilinear(img, dw, dh), img.width(), img.height());
}

FloatImage jpeg_compress(const FloatImage& img, int quality) {
  require_rgb(img, "jpeg");
  const PixelBuffer px = img.to_pixels();
  const std::vector<uint8_t> bytes = encode_jpeg(px, quality);
  return FloatImage::from_pixels(decode_jpeg(bytes));
}

// ---------------------------------------------------------------------------
// Registry adapters
// ---------------------------------------------------------------------------

namespace {

FloatImage run_gaussian(const FloatImage& img, const ParamRecord& p, RngStream& rng) {
  return gaussian_noise(img, p.num("sigma"), rng);
}

FloatImage run_shot(const FloatImage& img, const ParamRecord& p, RngStream& rng) {
  const std::string variant = p.str("variant", "additive");
  if (variant == "additive") {
    return shot_noise_additive(img, p.num("lambda"), p.num("scale"), rng);
  }
  if (variant == "signal_dependent") {
    return shot_noise_signal(img, p.num("photon_scale"), rng);
  }
  throw Error("unknown shot_noise variant '" + variant + "'");
}

FloatImage run_speckle(const FloatImage& img, const ParamRecord& p, RngStream& rng) {
  return speckle_noise(img, p.num("sigma"), rng);
}

FloatImage run_impulse(const FloatImage& img, const ParamRecord& p, RngStream& rng) {
  const std::string variant = p.str("variant", "salt_pepper");
  ImpulseVariant v;
  if (variant == "salt_pepper") {
    v = ImpulseVariant::kSaltPepper;
  } else if (variant == "random_valued") {
    v = ImpulseVariant::kRandomValued;
  } else {
    throw Error("unknown impulse_noise variant '" + variant + "'");
  }
  return impulse_noise(img, p.num("amount"), v, rng);
}

FloatImage run_invert(const FloatImage& img, const ParamRecord&, RngStream&) {
  return color_invert(img);
}

FloatImage run_threshold(const FloatImage& img, const ParamRecord& p, RngStream&) {
  return binary_threshold(img, p.num("threshold"));
}

FloatImage run_brightness(const FloatImage& img, const ParamRecord& p, RngStream&) {
  return brightness(img, p.num("shift"));
}

FloatImage run_saturation(const FloatImage& img, const ParamRecord& p, RngStream&) {
  return saturation(img, p.num("factor"), p.num("shift", 0.0));
}

FloatImage run_contrast(const FloatImage& img, const ParamRecord& p, RngStream&) {
  return contrast(img, p.num("factor"));
}

FloatImage run_grayscale(const FloatImage& img, const ParamRecord& p, RngStream&) {
  return grayscale(img, p.num("invert", 0.0) != 0.0);
}

FloatImage run_defocus(const FloatImage& img, const ParamRecord& p, RngStream&) {
  return defocus_blur(img, p.num("radius"), p.num("alias_blur", 0.0));
}

FloatImage run_zoom(const FloatImage& img, const ParamRecord& p, RngStream&) {
  return zoom_blur(img, p.num("max_zoom"), p.num("zoom_step"));
}

FloatImage run_glass(const FloatImage& img, const ParamRecord& p, RngStream& rng) {
  return glass_blur(img, p.num("sigma"), p.integer("max_delta"),
                    p.integer("iterations"), rng);
}

FloatImage run_snow(const FloatImage& img, const ParamRecord& p, RngStream& rng) {
  SnowParams sp;
  sp.layer_mean = p.num("layer_mean");
  sp.layer_sigma = p.num("layer_sigma");
  sp.layer_zoom = p.num("layer_zoom");
  sp.threshold = p.num("threshold");
  sp.blur_length = p.integer("blur_length");
  sp.blur_sigma = p.num("blur_sigma");
  sp.blend = p.num("blend");
  return snow(img, sp, rng);
}

FloatImage run_splatter(const FloatImage& img, const ParamRecord& p, RngStream& rng) {
  SplatterParams sp;
  sp.density = p.num("density");
  sp.field_sigma = p.num("field_sigma");
  sp.smooth_sigma = p.num("smooth_sigma");
  sp.threshold = p.num("threshold");
  sp.soften_sigma = p.num("soften_sigma");
  sp.color[0] = p.num("color_r");
  sp.color[1] = p.num("color_g");
  sp.color[2] = p.num("color_b");
  return splatter(img, sp, rng);
}

FloatImage run_elastic(const FloatImage& img, const ParamRecord& p, RngStream& rng) {
  return elastic(img, p.num("alpha"), p.num("sigma"), rng);
}

FloatImage run_pixelate(const FloatImage& img, const ParamRecord& p, RngStream&) {
  return pixelate(img, p.num("factor"));
}

FloatImage run_jpeg(const FloatImage& img, const ParamRecord& p, RngStream&) {
  return jpeg_compress(img, p.integer("quality"));
}

}  // namespace

const std::vector<CorruptionInfo>& corruption_catalog() {
  static const std::vector<CorruptionInfo> catalog = {
      {"gaussian_noise", true, true, run_gaussian},
      {"shot_noise", true, true, run_shot},
      {"impulse_noise", true, true, run_impulse},
      {"speckle_noise", true, true, run_speckle},
      {"color_invert", false, false, run_invert},
      {"binary_threshold", false, false, run_threshold},
      {"brightness", false, true, run_brightness},
      {"saturation", false, true, run_saturation},
      {"contrast", false, true, run_contrast},
      {"grayscale", false, false, run_grayscale},
      {"defocus_blur", false, true, run_defocus},
      {"zoom_blur", false, true, run_zoom},
      {"glass_blur", true, false, run_glass},
      {"snow", true, true, run_snow},
      {"splatter", true, true, run_splatter},
      {"elastic", true, true, run_elastic},
      {"pixelate", false, true, run_pixelate},
      {"jpeg", false, true, run_jpeg},
  };
  return catalog;
}

const CorruptionInfo* find_corruption(std::string_view id) {
  for (const CorruptionInfo& info : corruption_catalog()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

std::vector<std::string> benchmark_corruption_ids() {
  std::vector<std::string> out;
  for (const CorruptionInfo& info : corruption_catalog()) {
    if (info.benchmark) out.push_back(info.id);
  }
  return out;
}

void validate_table(const SeverityTable& table) {
  for (const CorruptionInfo& info : corruption_catalog()) {
    if (!table.has(info.id)) {
      throw Error("severity table is missing corruption '" + info.id + "'");
    }
  }
  for (const std::string& id : table.corruption_ids()) {
    if (find_corruption(id) == nullptr) {
      throw Error("severity table names unknown corruption '" + id + "'");
    }
  }
}

CorruptionSpec resolve_spec(const std::string& corruption, int level,
                            const SeverityTable& table, uint64_t seed) {
  if (find_corruption(corruption) == nullptr) {
    throw Error("unknown corruption '" + corruption + "'");
  }
  if (level < 0 || level > 5) {
    throw Error("severity level must be in [0,5], got " + std::to_string(level));
  }
  CorruptionSpec spec;
  spec.corruption = corruption;
  spec.level = level;
  spec.seed = seed;
  if (level > 0) spec.params = table.record(corruption, level);
  return spec;
}

PixelBuffer apply(const CorruptionSpec& spec, const PixelBuffer& img) {
  const CorruptionInfo* info = find_corruption(spec.corruption);
  if (info == nullptr) {
    throw Error("unknown corruption '" + spec.corruption + "'");
  }
  if (spec.level < 0 || spec.level > 5) {
    throw Error("severity level must be in [0,5], got " +
                std::to_string(spec.level));
  }
  if (spec.level == 0) return img;

  RngStream rng = SeededRng(spec.seed).stream(spec.corruption, spec.level);
  const FloatImage out = info->fn(FloatImage::from_pixels(img), spec.params, rng);
  return out.to_pixels();
}

}  // namespace vrb
