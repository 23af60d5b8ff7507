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

#include "vrb/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include <json.hpp>

#include "vrb/error.hpp"
#include "vrb/imageio.hpp"

namespace vrb {

using nlohmann::json;

const ManifestEntry* Manifest::find(const std::string& corruption, int level,
                                    const std::string& image) const {
  for (const ManifestEntry& e : entries) {
    if (e.level == level && e.corruption == corruption && e.image == image) {
      return &e;
    }
  }
  return nullptr;
}

std::string Manifest::to_json() const {
  std::vector<const ManifestEntry*> sorted;
  sorted.reserve(entries.size());
  for (const ManifestEntry& e : entries) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const ManifestEntry* a, const ManifestEntry* b) {
              return std::tie(a->corruption, a->level, a->image) <
                     std::tie(b->corruption, b->level, b->image);
            });

  json j;
  j["dataset"] = dataset;
  j["root_seed"] = root_seed;
  j["severity_table_version"] = severity_version;
  json arr = json::array();
  for (const ManifestEntry* e : sorted) {
    json entry;
    entry["corruption"] = e->corruption;
    entry["level"] = e->level;
    entry["image"] = e->image;
    entry["path"] = e->path;
    entry["sha256"] = e->sha256;
    arr.push_back(std::move(entry));
  }
  j["entries"] = std::move(arr);
  return j.dump(2) + "\n";
}

void Manifest::save(const std::string& path) const {
  atomic_write_file(path, to_json());
}

Manifest Manifest::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open manifest '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("failed to parse manifest '" + path + "': " + e.what());
  }
  Manifest m;
  try {
    m.dataset = j.at("dataset").get<std::string>();
    m.root_seed = j.at("root_seed").get<uint64_t>();
    m.severity_version = j.at("severity_table_version").get<int>();
    for (const json& e : j.at("entries")) {
      ManifestEntry entry;
      entry.corruption = e.at("corruption").get<std::string>();
      entry.level = e.at("level").get<int>();
      entry.image = e.at("image").get<std::string>();
      entry.path = e.at("path").get<std::string>();
      entry.sha256 = e.at("sha256").get<std::string>();
      m.entries.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw Error("malformed manifest '" + path + "': " + e.what());
  }
  return m;
}

}  // namespace vrb
