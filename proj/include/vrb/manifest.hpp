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

namespace vrb {

struct ManifestEntry {
  std::string corruption;
  int level = 0;
  std::string image;   // source image id (file stem)
  std::string path;    // relative to the manifest directory
  std::string sha256;  // content digest of the written file
};

/// Provenance record for one generated tree: enough to reproduce it
/// (root seed, severity-table version) and to verify it (per-file digests).
struct Manifest {
  std::string dataset;
  uint64_t root_seed = 0;
  int severity_version = 0;
  std::vector<ManifestEntry> entries;

  const ManifestEntry* find(const std::string& corruption, int level,
                            const std::string& image) const;

  /// Serialized with entries sorted (corruption, level, image) so repeated
  /// runs are byte-identical.
  std::string to_json() const;
  void save(const std::string& path) const;
  static Manifest load(const std::string& path);
};

}  // namespace vrb
