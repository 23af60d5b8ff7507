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
#include <functional>
#include <string>
#include <vector>

#include "vrb/manifest.hpp"
#include "vrb/severity.hpp"

namespace vrb {

struct GenerateConfig {
  std::string images_dir;
  std::string out_dir;
  std::vector<std::string> corruptions;  // empty = the 14 benchmark ones
  int level_lo = 1;
  int level_hi = 5;
  uint64_t seed = 0;
  SeverityTable table;  // must cover every requested corruption
  int jobs = 0;         // 0 = hardware concurrency
  std::string dataset_name;  // empty = basename of images_dir
};

struct GenerateResult {
  Manifest manifest;
  int written = 0;  // files generated this run
  int reused = 0;   // files skipped because the manifest digest matched
};

/// Applies every (corruption, level) in scope to every image under
/// images_dir, writing <out>/<corruption>/<level>/<image>.png plus a
/// manifest. Outputs are a pure function of (image bytes, spec, seed), so
/// results are identical for any worker count. A pre-existing manifest
/// makes the run resumable: entries whose files match their digest are
/// kept as-is.
GenerateResult generate_dataset(const GenerateConfig& config);

/// Runs fn(0..count-1) on a small thread pool; any exception is rethrown
/// on the caller thread.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace vrb
