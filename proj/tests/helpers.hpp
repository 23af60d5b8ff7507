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

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <string>

#include "vrb/image.hpp"
#include "vrb/rng.hpp"

namespace vrbtest {

inline vrb::PixelBuffer solid(int w, int h, uint8_t r, uint8_t g, uint8_t b) {
  vrb::PixelBuffer img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.at(x, y, 0) = r;
      img.at(x, y, 1) = g;
      img.at(x, y, 2) = b;
    }
  }
  return img;
}

inline vrb::PixelBuffer gradient(int w, int h) {
  vrb::PixelBuffer img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      img.at(x, y, 0) = static_cast<uint8_t>((x * 255) / std::max(1, w - 1));
      img.at(x, y, 1) = static_cast<uint8_t>((y * 255) / std::max(1, h - 1));
      img.at(x, y, 2) = static_cast<uint8_t>(((x + y) * 255) /
                                             std::max(1, w + h - 2));
    }
  }
  return img;
}

inline vrb::PixelBuffer checkerboard(int w, int h, int cell = 1) {
  vrb::PixelBuffer img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const uint8_t v = ((x / cell + y / cell) % 2 == 0) ? 0 : 255;
      img.at(x, y, 0) = img.at(x, y, 1) = img.at(x, y, 2) = v;
    }
  }
  return img;
}

// deterministic photographic-ish texture: smooth wavy color fields
inline vrb::PixelBuffer textured(int w, int h, uint64_t seed = 7) {
  vrb::RngStream rng(seed);
  const double px = rng.uniform(0.02, 0.08);
  const double py = rng.uniform(0.02, 0.08);
  vrb::PixelBuffer img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double a = 0.5 + 0.45 * std::sin(px * x + 0.3) * std::cos(py * y);
      const double b = 0.5 + 0.40 * std::sin(px * 1.7 * x + py * y);
      const double c = 0.5 + 0.35 * std::cos(px * x - py * 2.1 * y + 1.0);
      img.at(x, y, 0) = vrb::quantize_unit(a);
      img.at(x, y, 1) = vrb::quantize_unit(b);
      img.at(x, y, 2) = vrb::quantize_unit(c);
    }
  }
  return img;
}

/// Temporary directory removed on scope exit.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<uint64_t> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("vrb_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace vrbtest
