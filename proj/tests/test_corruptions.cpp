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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "helpers.hpp"
#include "vrb/corruptions.hpp"
#include "vrb/error.hpp"
#include "vrb/kernel.hpp"

using namespace vrb;
using vrbtest::checkerboard;
using vrbtest::gradient;
using vrbtest::solid;
using vrbtest::textured;

namespace {

RngStream stream(uint64_t seed = 1) { return RngStream(seed); }

FloatImage constant_float(int w, int h, double v, int ch = 3) {
  FloatImage img(w, h, ch);
  for (double& x : img.data()) x = v;
  return img;
}

double sample_std(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= xs.size();
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return std::sqrt(var / (xs.size() - 1));
}

}  // namespace

// ---------------------------------------------------------------------------
// noise
// ---------------------------------------------------------------------------

TEST_CASE("zero-strength noise is the identity") {
  const FloatImage img = FloatImage::from_pixels(textured(32, 24));
  RngStream rng = stream();
  CHECK(gaussian_noise(img, 0.0, rng).data() == img.data());
  CHECK(shot_noise_additive(img, 0.0, 6.0, rng).data() == img.data());
  CHECK(speckle_noise(img, 0.0, rng).data() == img.data());
  CHECK(impulse_noise(img, 0.0, ImpulseVariant::kSaltPepper, rng).data() ==
        img.data());
}

TEST_CASE("gaussian noise std on a mid-gray image") {
  const FloatImage img = constant_float(400, 300, 0.5);
  RngStream rng = stream(2);
  const FloatImage out = gaussian_noise(img, 0.1, rng);
  std::vector<double> noise;
  noise.reserve(out.data().size());
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    noise.push_back(out.data()[i] - 0.5);
  }
  CHECK(sample_std(noise) == doctest::Approx(0.1).epsilon(0.01));
}

TEST_CASE("additive shot noise shifts the mean by lambda/scale") {
  const FloatImage img = constant_float(300, 200, 0.25);
  RngStream rng = stream(3);
  const FloatImage out = shot_noise_additive(img, 1.2, 6.0, rng);
  CHECK(out.mean() == doctest::Approx(0.25 + 1.2 / 6.0).epsilon(0.01));
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    CHECK(out.data()[i] >= 0.25);  // Poisson draws are nonnegative
  }
}

TEST_CASE("signal-dependent shot noise keeps black black") {
  const FloatImage img = constant_float(16, 16, 0.0);
  RngStream rng = stream(4);
  CHECK(shot_noise_signal(img, 12.0, rng).data() == img.data());
}

TEST_CASE("speckle noise annihilates on black and scales with intensity") {
  RngStream rng = stream(5);
  const FloatImage black = constant_float(20, 20, 0.0);
  CHECK(speckle_noise(black, 0.7, rng).data() == black.data());

  const FloatImage gray = constant_float(400, 300, 0.5);
  RngStream rng2 = stream(6);
  const FloatImage out = speckle_noise(gray, 0.2, rng2);
  std::vector<double> noise;
  for (double v : out.data()) noise.push_back(v - 0.5);
  // Var(r X) = r^2 sigma^2 -> std 0.5 * 0.2 = 0.1
  CHECK(sample_std(noise) == doctest::Approx(0.1).epsilon(0.01));
}

TEST_CASE("salt and pepper extremes") {
  const FloatImage img = FloatImage::from_pixels(textured(40, 30));
  RngStream rng = stream(7);
  const FloatImage out = impulse_noise(img, 1.0, ImpulseVariant::kSaltPepper, rng);
  int salt = 0, pepper = 0;
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const double v = out.at(x, y, 0);
      REQUIRE((v == 0.0 || v == 1.0));
      CHECK(out.at(x, y, 1) == v);  // all channels take the same value
      CHECK(out.at(x, y, 2) == v);
      (v == 1.0 ? salt : pepper) += 1;
    }
  }
  CHECK(salt > 0);
  CHECK(pepper > 0);
}

TEST_CASE("impulse noise hits about p of the pixels") {
  const FloatImage img = constant_float(400, 300, 0.5);
  for (const auto variant :
       {ImpulseVariant::kSaltPepper, ImpulseVariant::kRandomValued}) {
    RngStream rng = stream(8);
    const FloatImage out = impulse_noise(img, 0.05, variant, rng);
    int changed = 0;
    for (int y = 0; y < out.height(); ++y) {
      for (int x = 0; x < out.width(); ++x) {
        if (out.at(x, y, 0) != 0.5) ++changed;
      }
    }
    const double frac = static_cast<double>(changed) / (400.0 * 300.0);
    // 4 sigma binomial tolerance on 120000 pixels
    CHECK(std::abs(frac - 0.05) <= 4.0 * std::sqrt(0.05 * 0.95 / 120000.0));
  }
}

TEST_CASE("impulse probability is validated") {
  const FloatImage img = constant_float(4, 4, 0.5);
  RngStream rng = stream();
  CHECK_THROWS_AS(impulse_noise(img, -0.1, ImpulseVariant::kSaltPepper, rng), Error);
  CHECK_THROWS_AS(impulse_noise(img, 1.1, ImpulseVariant::kSaltPepper, rng), Error);
}

// ---------------------------------------------------------------------------
// arithmetic / value assignment
// ---------------------------------------------------------------------------

TEST_CASE("color inversion") {
  const SeverityTable& table = SeverityTable::builtin();
  const CorruptionSpec spec = resolve_spec("color_invert", 3, table, 0);

  PixelBuffer img(2, 1);
  img.at(1, 0, 0) = 255;
  img.at(1, 0, 1) = 128;
  img.at(1, 0, 2) = 0;
  const PixelBuffer out = apply(spec, img);
  CHECK(out.at(0, 0, 0) == 255);
  CHECK(out.at(0, 0, 1) == 255);
  CHECK(out.at(0, 0, 2) == 255);
  CHECK(out.at(1, 0, 0) == 0);
  CHECK(out.at(1, 0, 1) == 127);
  CHECK(out.at(1, 0, 2) == 255);

  // involution
  CHECK(apply(spec, out) == img);
  const PixelBuffer photo = textured(30, 20);
  CHECK(apply(spec, apply(spec, photo)) == photo);
}

TEST_CASE("binary threshold tie and boundary rules") {
  FloatImage img(3, 1, 3);
  img.at(0, 0, 0) = img.at(0, 0, 1) = img.at(0, 0, 2) = 200 / 255.0;
  img.at(1, 0, 0) = img.at(1, 0, 1) = img.at(1, 0, 2) = 128 / 255.0;
  img.at(2, 0, 0) = img.at(2, 0, 1) = img.at(2, 0, 2) = 1.0;

  const FloatImage at128 = binary_threshold(img, 128.0);
  CHECK(at128.at(0, 0, 0) == 1.0);  // 200 > 128
  CHECK(at128.at(1, 0, 0) == 0.0);  // strict inequality at the threshold
  CHECK(at128.at(2, 0, 0) == 1.0);

  // nothing exceeds 255
  const FloatImage at255 = binary_threshold(img, 255.0);
  for (double v : at255.data()) CHECK(v == 0.0);

  CHECK_THROWS_AS(binary_threshold(img, -1.0), Error);
  CHECK_THROWS_AS(binary_threshold(img, 256.0), Error);
}

// ---------------------------------------------------------------------------
// image attribute transforms
// ---------------------------------------------------------------------------

TEST_CASE("brightness shift") {
  const FloatImage img = FloatImage::from_pixels(textured(20, 14));
  CHECK(brightness(img, 0.0).to_pixels() == img.to_pixels());

  const FloatImage white = constant_float(6, 6, 1.0);
  const FloatImage brighter = brightness(white, 0.3);
  for (double v : brighter.data()) CHECK(v == 1.0);

  const FloatImage gray = constant_float(6, 6, 0.5);
  const FloatImage shifted = brightness(gray, 0.2);
  for (double v : shifted.data()) CHECK(v == doctest::Approx(0.7));

  const FloatImage darker = brightness(gray, -0.2);
  for (double v : darker.data()) CHECK(v == doctest::Approx(0.3));
}

TEST_CASE("saturation affine map") {
  const PixelBuffer img = textured(20, 14);
  const FloatImage fimg = FloatImage::from_pixels(img);
  CHECK(saturation(fimg, 1.0, 0.0).to_pixels() == img);

  // zero saturation leaves an achromatic image
  const PixelBuffer gray = saturation(fimg, 0.0, 0.0).to_pixels();
  for (int y = 0; y < gray.height(); ++y) {
    for (int x = 0; x < gray.width(); ++x) {
      CHECK(gray.at(x, y, 0) == gray.at(x, y, 1));
      CHECK(gray.at(x, y, 1) == gray.at(x, y, 2));
    }
  }

  // half-saturated pure red
  const FloatImage red = [&] {
    FloatImage f(1, 1, 3);
    f.at(0, 0, 0) = 1.0;
    return f;
  }();
  const PixelBuffer half = saturation(red, 0.5, 0.0).to_pixels();
  CHECK(half.at(0, 0, 0) == 255);
  CHECK(std::abs(half.at(0, 0, 1) - 128) <= 1);
  CHECK(std::abs(half.at(0, 0, 2) - 128) <= 1);
}

TEST_CASE("contrast re-spread about the mean") {
  const PixelBuffer img = textured(20, 14);
  const FloatImage fimg = FloatImage::from_pixels(img);
  CHECK(contrast(fimg, 1.0).to_pixels() == img);

  const FloatImage flat = contrast(fimg, 0.0);
  const double mean = fimg.mean();
  for (double v : flat.data()) CHECK(v == doctest::Approx(mean));

  FloatImage two(2, 1, 1);
  two.at(0, 0) = 0.2;
  two.at(1, 0) = 0.8;
  const FloatImage out = contrast(two, 0.5);
  CHECK(out.at(0, 0) == doctest::Approx(0.35));
  CHECK(out.at(1, 0) == doctest::Approx(0.65));

  CHECK_THROWS_AS(contrast(fimg, -0.5), Error);
}

TEST_CASE("grayscale channel averaging") {
  PixelBuffer img(1, 1);
  img.at(0, 0, 0) = 10;
  img.at(0, 0, 1) = 20;
  img.at(0, 0, 2) = 30;
  const FloatImage fimg = FloatImage::from_pixels(img);

  const PixelBuffer gray = grayscale(fimg, false).to_pixels();
  CHECK(gray.at(0, 0, 0) == 20);
  CHECK(gray.at(0, 0, 1) == 20);
  CHECK(gray.at(0, 0, 2) == 20);

  const PixelBuffer inverted = grayscale(fimg, true).to_pixels();
  CHECK(inverted.at(0, 0, 0) == 235);
  CHECK(inverted.at(0, 0, 1) == 235);
  CHECK(inverted.at(0, 0, 2) == 235);

  const PixelBuffer already = solid(8, 8, 77, 77, 77);
  CHECK(grayscale(FloatImage::from_pixels(already), false).to_pixels() == already);
}

// ---------------------------------------------------------------------------
// blur
// ---------------------------------------------------------------------------

TEST_CASE("defocus blur") {
  const PixelBuffer flat = solid(24, 18, 120, 60, 200);
  const PixelBuffer out =
      defocus_blur(FloatImage::from_pixels(flat), 4.0, 0.5).to_pixels();
  CHECK(out == flat);

  // sub-pixel radius: at most one intensity step of deviation
  const PixelBuffer img = textured(24, 18);
  const PixelBuffer near_id =
      defocus_blur(FloatImage::from_pixels(img), 0.5, 0.1).to_pixels();
  int max_dev = 0;
  for (std::size_t i = 0; i < img.data().size(); ++i) {
    max_dev = std::max(max_dev, std::abs(static_cast<int>(img.data()[i]) -
                                         static_cast<int>(near_id.data()[i])));
  }
  CHECK(max_dev <= 1);

  // a one-hot input reproduces the kernel stamp
  FloatImage impulse(21, 21, 1);
  impulse.at(10, 10) = 1.0;
  const FloatImage stamped = defocus_blur(impulse, 3.0, 0.0);
  const Kernel k = disk_kernel(3.0, 0.0);
  for (int j = -k.radius(); j <= k.radius(); ++j) {
    for (int i = -k.radius(); i <= k.radius(); ++i) {
      CHECK(stamped.at(10 + i, 10 + j) ==
            doctest::Approx(k.at(i, j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("zoom blur") {
  const FloatImage img = FloatImage::from_pixels(textured(33, 33));
  // max_zoom 1: a single unity term, so the average is the input
  CHECK(zoom_blur(img, 1.0, 0.01).data() == img.data());

  const PixelBuffer flat = solid(32, 32, 90, 140, 30);
  CHECK(zoom_blur(FloatImage::from_pixels(flat), 1.31, 0.03).to_pixels() == flat);

  // a centered bright dot stays the brightest pixel
  FloatImage dot(33, 33, 1);
  dot.at(16, 16) = 1.0;
  const FloatImage out = zoom_blur(dot, 1.26, 0.02);
  for (int y = 0; y < 33; ++y) {
    for (int x = 0; x < 33; ++x) {
      if (x == 16 && y == 16) continue;
      CHECK(out.at(x, y) < out.at(16, 16));
    }
  }
  CHECK(out.at(16, 16) == doctest::Approx(1.0));
}

TEST_CASE("glass blur") {
  const FloatImage img = FloatImage::from_pixels(textured(32, 24));
  RngStream rng = stream(9);
  CHECK(glass_blur(img, 0.0, 0, 0, rng).data() == img.data());

  // swaps only: the histogram is preserved exactly
  RngStream rng2 = stream(10);
  const FloatImage swapped = glass_blur(img, 0.0, 2, 3, rng2);
  auto histogram = [](const FloatImage& f) {
    std::map<double, int> h;
    for (double v : f.data()) ++h[v];
    return h;
  };
  CHECK(histogram(swapped) == histogram(img));
  CHECK(swapped.data() != img.data());

  // determinism
  RngStream ra = stream(11), rb = stream(11);
  CHECK(glass_blur(img, 0.7, 1, 2, ra).data() ==
        glass_blur(img, 0.7, 1, 2, rb).data());

  // neighborhood larger than the image: no interior, no swaps
  const FloatImage tiny = FloatImage::from_pixels(textured(4, 4));
  RngStream rc = stream(12);
  CHECK(glass_blur(tiny, 0.0, 3, 2, rc).data() == tiny.data());
}

// ---------------------------------------------------------------------------
// weather / physical / digital
// ---------------------------------------------------------------------------

TEST_CASE("snow with an empty layer and full blend is the identity") {
  SnowParams p;
  p.layer_mean = 0.1;
  p.layer_sigma = 0.05;  // threshold at 18 sigma keeps nothing
  p.layer_zoom = 1.0;
  p.threshold = 1.0;
  p.blur_length = 1;
  p.blur_sigma = 0.0;
  p.blend = 1.0;
  const PixelBuffer img = textured(28, 20);
  RngStream rng = stream(13);
  CHECK(snow(FloatImage::from_pixels(img), p, rng).to_pixels() == img);
}

TEST_CASE("snow only adds light") {
  const SeverityTable& table = SeverityTable::builtin();
  const PixelBuffer img = textured(48, 36);
  for (int level : {1, 3, 5}) {
    const PixelBuffer out = apply(resolve_spec("snow", level, table, 77), img);
    for (std::size_t i = 0; i < img.data().size(); ++i) {
      CHECK(out.data()[i] >= img.data()[i]);
    }
  }
}

TEST_CASE("splatter") {
  const PixelBuffer img = textured(96, 96);
  const FloatImage fimg = FloatImage::from_pixels(img);

  SplatterParams p;
  p.density = 0.0;
  RngStream rng = stream(14);
  CHECK(splatter(fimg, p, rng).data() == fimg.data());

  // altered pixel count grows with the severity ladder
  const SeverityTable& table = SeverityTable::builtin();
  std::vector<int> altered;
  for (int level = 1; level <= 5; ++level) {
    const PixelBuffer out = apply(resolve_spec("splatter", level, table, 5), img);
    int count = 0;
    for (std::size_t i = 0; i < img.data().size(); ++i) {
      if (out.data()[i] != img.data()[i]) ++count;
    }
    altered.push_back(count);
  }
  for (int i = 1; i < 5; ++i) {
    CHECK(altered[i] > altered[i - 1]);
  }
}

TEST_CASE("elastic") {
  const PixelBuffer img = textured(40, 30);
  const FloatImage fimg = FloatImage::from_pixels(img);
  RngStream rng = stream(15);
  CHECK(elastic(fimg, 0.0, 4.0, rng).to_pixels() == img);

  RngStream rng2 = stream(16);
  const FloatImage flat = constant_float(24, 24, 0.42);
  const FloatImage warped = elastic(flat, 8.0, 3.0, rng2);
  for (double v : warped.data()) CHECK(v == doctest::Approx(0.42));

  // displacement bound: warp a coordinate ramp and bound the shift
  const double alpha = 3.0;
  FloatImage ramp(64, 64, 1);
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 64; ++x) ramp.at(x, y) = static_cast<double>(x);
  }
  RngStream rng3 = stream(17);
  const FloatImage out = elastic(ramp, alpha, 4.0, rng3);
  const int margin = static_cast<int>(std::ceil(alpha));
  for (int y = 0; y < 64; ++y) {
    for (int x = margin; x < 64 - margin; ++x) {
      CHECK(std::abs(out.at(x, y) - x) <= alpha + 1e-9);
    }
  }
}

TEST_CASE("pixelate") {
  const PixelBuffer img = textured(25, 19);
  CHECK(pixelate(FloatImage::from_pixels(img), 1.0).to_pixels() == img);

  const PixelBuffer flat = solid(16, 16, 7, 77, 177);
  CHECK(pixelate(FloatImage::from_pixels(flat), 0.4).to_pixels() == flat);

  const PixelBuffer board = checkerboard(2, 2);
  const PixelBuffer out = pixelate(FloatImage::from_pixels(board), 0.5).to_pixels();
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    CHECK(std::abs(static_cast<int>(out.data()[i]) - 128) <= 1);
  }

  CHECK_THROWS_AS(pixelate(FloatImage::from_pixels(img), 0.0), Error);
  CHECK_THROWS_AS(pixelate(FloatImage::from_pixels(img), 1.5), Error);
}

TEST_CASE("jpeg compression artifacts grow as quality falls") {
  const PixelBuffer img = textured(64, 48);
  const FloatImage fimg = FloatImage::from_pixels(img);

  auto mae = [&](int quality) {
    const PixelBuffer out = jpeg_compress(fimg, quality).to_pixels();
    double err = 0.0;
    for (std::size_t i = 0; i < img.data().size(); ++i) {
      err += std::abs(static_cast<int>(img.data()[i]) -
                      static_cast<int>(out.data()[i]));
    }
    return err / img.data().size();
  };
  CHECK(mae(100) < 2.0);
  CHECK(mae(5) > mae(95) + 1.0);

  const PixelBuffer flat = solid(40, 40, 90, 90, 90);
  const PixelBuffer out = jpeg_compress(FloatImage::from_pixels(flat), 50).to_pixels();
  for (int c = 0; c < 3; ++c) {
    const uint8_t v = out.at(0, 0, c);
    CHECK(std::abs(static_cast<int>(v) - 90) <= 3);
    for (int y = 0; y < 40; ++y) {
      for (int x = 0; x < 40; ++x) CHECK(out.at(x, y, c) == v);
    }
  }

  CHECK_THROWS_AS(jpeg_compress(fimg, 0), Error);
  CHECK_THROWS_AS(jpeg_compress(fimg, 101), Error);
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

TEST_CASE("catalog shape") {
  CHECK(corruption_catalog().size() == 18);
  const std::vector<std::string> benchmark = benchmark_corruption_ids();
  CHECK(benchmark.size() == 14);
  const std::set<std::string> expected = {
      "shot_noise", "gaussian_noise", "impulse_noise", "speckle_noise",
      "defocus_blur", "zoom_blur", "snow", "brightness", "contrast",
      "saturation", "elastic", "splatter", "pixelate", "jpeg"};
  CHECK(std::set<std::string>(benchmark.begin(), benchmark.end()) == expected);
}

TEST_CASE("level 0 is a byte-identical copy for every corruption") {
  const SeverityTable& table = SeverityTable::builtin();
  const PixelBuffer img = textured(20, 16);
  for (const CorruptionInfo& info : corruption_catalog()) {
    const PixelBuffer out = apply(resolve_spec(info.id, 0, table, 9), img);
    CHECK(out == img);
  }
}

TEST_CASE("fixed seed and spec reproduce identical outputs") {
  const SeverityTable& table = SeverityTable::builtin();
  const PixelBuffer img = textured(48, 40);
  for (const CorruptionInfo& info : corruption_catalog()) {
    CAPTURE(info.id);
    const CorruptionSpec spec = resolve_spec(info.id, 3, table, 1234);
    CHECK(apply(spec, img) == apply(spec, img));
  }
}

TEST_CASE("deterministic corruptions ignore the seed") {
  const SeverityTable& table = SeverityTable::builtin();
  const PixelBuffer img = textured(32, 24);
  int deterministic = 0;
  for (const CorruptionInfo& info : corruption_catalog()) {
    if (info.stochastic) continue;
    ++deterministic;
    CAPTURE(info.id);
    const PixelBuffer a = apply(resolve_spec(info.id, 4, table, 1), img);
    const PixelBuffer b = apply(resolve_spec(info.id, 4, table, 2), img);
    CHECK(a == b);
  }
  CHECK(deterministic == 10);
}

TEST_CASE("registry errors") {
  const SeverityTable& table = SeverityTable::builtin();
  const PixelBuffer img = solid(4, 4, 1, 2, 3);
  CHECK_THROWS_WITH_AS(apply(resolve_spec("fog", 1, table, 0), img),
                       doctest::Contains("unknown corruption"), Error);
  CHECK_THROWS_AS(resolve_spec("snow", 6, table, 0), Error);
  CHECK_THROWS_AS(resolve_spec("snow", -1, table, 0), Error);

  CorruptionSpec bogus;
  bogus.corruption = "not_registered";
  bogus.level = 1;
  CHECK_THROWS_AS(apply(bogus, img), Error);
}

TEST_CASE("table variants select alternative formulations") {
  const PixelBuffer img = textured(32, 24);
  // random-valued impulse via the variant parameter
  SeverityTable t = SeverityTable::parse(
      "version = 9\n[impulse_noise]\nvariant = random_valued\namount = 1\n",
      "<t>");
  const PixelBuffer out = apply(resolve_spec("impulse_noise", 2, t, 3), img);
  std::set<uint8_t> values;
  for (uint8_t v : out.data()) values.insert(v);
  CHECK(values.size() > 2);  // not just salt and pepper

  // grayscale inversion via the invert flag
  SeverityTable g = SeverityTable::parse(
      "version = 9\n[grayscale]\ninvert = 1\n", "<t>");
  const PixelBuffer composed = apply(resolve_spec("grayscale", 1, g, 0), img);
  PixelBuffer reference(1, 1);
  {
    const FloatImage f = FloatImage::from_pixels(img);
    reference = grayscale(f, true).to_pixels();
  }
  CHECK(composed == reference);

  // signal-dependent shot noise
  SeverityTable s = SeverityTable::parse(
      "version = 9\n[shot_noise]\nvariant = signal_dependent\nphoton_scale = "
      "12\n",
      "<t>");
  const PixelBuffer black = solid(8, 8, 0, 0, 0);
  CHECK(apply(resolve_spec("shot_noise", 3, s, 3), black) == black);

  // unknown variants are rejected
  SeverityTable bad = SeverityTable::parse(
      "version = 9\n[shot_noise]\nvariant = bogus\n", "<t>");
  CHECK_THROWS_AS(apply(resolve_spec("shot_noise", 1, bad, 0), img), Error);
}
