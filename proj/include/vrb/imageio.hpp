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
#include <vector>

#include "vrb/image.hpp"

namespace vrb {

// PNG (lossless storage of generated images) and JPEG (the compression
// corruption) are the only codecs in scope. Non-RGB inputs are expanded
// to 8-bit RGB on read.

PixelBuffer decode_png(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> encode_png(const PixelBuffer& img);
PixelBuffer read_png(const std::string& path);
void write_png(const PixelBuffer& img, const std::string& path);

std::vector<uint8_t> encode_jpeg(const PixelBuffer& img, int quality);
PixelBuffer decode_jpeg(const std::vector<uint8_t>& bytes);

/// Reads a PNG or baseline JPEG, sniffing the signature bytes.
PixelBuffer read_image(const std::string& path);

std::vector<uint8_t> read_file(const std::string& path);

/// Write-then-rename so failures never leave partial files behind.
void atomic_write_file(const std::string& path, const void* data, std::size_t size);
void atomic_write_file(const std::string& path, const std::string& text);

}  // namespace vrb
