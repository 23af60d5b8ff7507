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
#include <string_view>
#include <vector>

namespace vrb {

/// One reproducible random stream. All samplers are implemented in-repo so
/// the byte stream never depends on the standard library implementation.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  double uniform();                        // [0, 1)
  double uniform(double lo, double hi);    // [lo, hi)
  int uniform_int(int lo, int hi);         // inclusive bounds

  /// Box-Muller; sigma 0 returns the mean without consuming the stream.
  double normal(double mean, double sigma);

  /// Knuth's method; large lambda is split into independent chunks.
  int64_t poisson(double lambda);

 private:
  uint64_t state_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

/// Root seed plus key-derivation: every (image, corruption, level) triple
/// maps to its own stream, identical across runs and independent of the
/// order in which work is scheduled.
class SeededRng {
 public:
  explicit SeededRng(uint64_t root) : root_(root) {}

  uint64_t root() const { return root_; }

  /// Fold a key (e.g. an image id) into a derived root.
  SeededRng fork(std::string_view key) const;

  RngStream stream(std::string_view corruption_id, int level) const;

 private:
  uint64_t root_;
};

struct Distribution {
  enum class Kind { kNormal, kPoisson, kUniform };
  Kind kind = Kind::kNormal;
  double a = 0.0;  // normal: mean; poisson: lambda; uniform: lo
  double b = 0.0;  // normal: sigma; uniform: hi

  static Distribution normal(double mean, double sigma) {
    return {Kind::kNormal, mean, sigma};
  }
  static Distribution poisson(double lambda) {
    return {Kind::kPoisson, lambda, 0.0};
  }
  static Distribution uniform(double lo, double hi) {
    return {Kind::kUniform, lo, hi};
  }
};

/// Draw n values; rejects invalid parameters (sigma < 0, lambda < 0).
std::vector<double> sample(RngStream& rng, const Distribution& dist, std::size_t n);

uint64_t fnv1a64(std::string_view s);
uint64_t mix64(uint64_t x);  // splitmix64 finalizer

}  // namespace vrb
