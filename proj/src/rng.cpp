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

#include "vrb/rng.hpp"

#include <cmath>

#include "vrb/error.hpp"

namespace vrb {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Largest lambda handled by a single Knuth loop; bigger means are split
// into sums of independent draws (Poisson is additive).
constexpr double kKnuthLambdaLimit = 16.0;

int64_t poisson_knuth(RngStream& rng, double lambda) {
  const double limit = std::exp(-lambda);
  int64_t k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= rng.uniform();
  } while (p > limit);
  return k - 1;
}

}  // namespace

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t RngStream::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double RngStream::uniform() {
  return (next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

int RngStream::uniform_int(int lo, int hi) {
  if (hi < lo) throw Error("uniform_int: empty range");
  const uint64_t width = static_cast<uint64_t>(hi) - lo + 1;
  return lo + static_cast<int>(next_u64() % width);
}

double RngStream::normal(double mean, double sigma) {
  if (sigma < 0.0) throw Error("normal: sigma must be >= 0");
  if (sigma == 0.0) return mean;
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return mean + sigma * spare_normal_;
  }
  double u1 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  spare_normal_ = mag * std::sin(kTwoPi * u2);
  has_spare_normal_ = true;
  return mean + sigma * mag * std::cos(kTwoPi * u2);
}

int64_t RngStream::poisson(double lambda) {
  if (lambda < 0.0) throw Error("poisson: lambda must be >= 0");
  if (lambda == 0.0) return 0;
  int64_t total = 0;
  double remaining = lambda;
  while (remaining > kKnuthLambdaLimit) {
    total += poisson_knuth(*this, kKnuthLambdaLimit);
    remaining -= kKnuthLambdaLimit;
  }
  total += poisson_knuth(*this, remaining);
  return total;
}

SeededRng SeededRng::fork(std::string_view key) const {
  return SeededRng(mix64(root_ ^ fnv1a64(key)));
}

RngStream SeededRng::stream(std::string_view corruption_id, int level) const {
  uint64_t seed = mix64(root_ ^ fnv1a64(corruption_id));
  seed = mix64(seed ^ static_cast<uint64_t>(level));
  return RngStream(seed);
}

std::vector<double> sample(RngStream& rng, const Distribution& dist, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  switch (dist.kind) {
    case Distribution::Kind::kNormal:
      if (dist.b < 0.0) throw Error("sample: sigma must be >= 0");
      for (std::size_t i = 0; i < n; ++i) out.push_back(rng.normal(dist.a, dist.b));
      break;
    case Distribution::Kind::kPoisson:
      if (dist.a < 0.0) throw Error("sample: lambda must be >= 0");
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(static_cast<double>(rng.poisson(dist.a)));
      }
      break;
    case Distribution::Kind::kUniform:
      for (std::size_t i = 0; i < n; ++i) out.push_back(rng.uniform(dist.a, dist.b));
      break;
  }
  return out;
}

}  // namespace vrb
