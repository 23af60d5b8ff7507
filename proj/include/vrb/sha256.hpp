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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vrb {

/// FIPS 180-4 SHA-256, used for manifest content digests.
class Sha256 {
 public:
  Sha256();
  void update(const void* data, std::size_t size);
  std::array<uint8_t, 32> finish();

  static std::string hex(const void* data, std::size_t size);
  static std::string hex(const std::vector<uint8_t>& bytes);
  static std::string hex_file(const std::string& path);

 private:
  void process_block(const uint8_t* block);

  std::array<uint32_t, 8> state_;
  uint64_t total_bytes_ = 0;
  std::array<uint8_t, 64> buffer_{};
  std::size_t buffered_ = 0;
};

}  // namespace vrb
