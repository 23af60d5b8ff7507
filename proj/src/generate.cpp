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

#include "vrb/generate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <mutex>
#include <thread>

#include "vrb/corruptions.hpp"
#include "vrb/error.hpp"
#include "vrb/imageio.hpp"
#include "vrb/rng.hpp"
#include "vrb/sha256.hpp"

namespace vrb {

namespace fs = std::filesystem;

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);  // stop handing out work
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

std::vector<fs::path> list_images(const std::string& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) {
    throw Error("image directory '" + dir + "' does not exist");
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
    if (ext == ".png" || ext == ".jpg" || ext == ".jpeg") {
      out.push_back(entry.path());
    }
  }
  if (out.empty()) throw Error("no images found under '" + dir + "'");
  std::sort(out.begin(), out.end());
  return out;
}

struct Task {
  const fs::path* source;
  std::string image_id;
  std::string corruption;
  int level;
  std::string rel_path;
};

// distinguishes decode caches across generate_dataset calls
std::atomic<uint64_t> g_run_serial{0};

}  // namespace

GenerateResult generate_dataset(const GenerateConfig& config) {
  if (config.level_lo < 1 || config.level_hi > 5 ||
      config.level_lo > config.level_hi) {
    throw Error("level range must lie within 1..5");
  }

  std::vector<std::string> corruption_ids =
      config.corruptions.empty() ? benchmark_corruption_ids() : config.corruptions;
  for (const std::string& id : corruption_ids) {
    if (find_corruption(id) == nullptr) {
      throw Error("unknown corruption '" + id + "'");
    }
    if (!config.table.has(id)) {
      throw Error("severity table has no records for '" + id + "'");
    }
  }

  const std::vector<fs::path> images = list_images(config.images_dir);
  fs::create_directories(config.out_dir);
  for (const std::string& id : corruption_ids) {
    for (int level = config.level_lo; level <= config.level_hi; ++level) {
      fs::create_directories(fs::path(config.out_dir) / id / std::to_string(level));
    }
  }

  // resume support: trust files whose digest still matches the manifest
  Manifest previous;
  const std::string manifest_path =
      (fs::path(config.out_dir) / "manifest.json").string();
  if (fs::exists(manifest_path)) {
    previous = Manifest::load(manifest_path);
  }

  // tasks grouped by image so a worker's consecutive tasks usually share
  // their decoded source
  std::vector<Task> tasks;
  tasks.reserve(images.size() * corruption_ids.size() *
                (config.level_hi - config.level_lo + 1));
  for (const fs::path& img : images) {
    const std::string image_id = img.stem().string();
    for (const std::string& id : corruption_ids) {
      for (int level = config.level_lo; level <= config.level_hi; ++level) {
        Task task;
        task.source = &img;
        task.image_id = image_id;
        task.corruption = id;
        task.level = level;
        task.rel_path = id + "/" + std::to_string(level) + "/" + image_id + ".png";
        tasks.push_back(std::move(task));
      }
    }
  }

  const SeededRng root(config.seed);
  const uint64_t run_serial = g_run_serial.fetch_add(1);
  std::vector<ManifestEntry> entries(tasks.size());
  std::atomic<int> written{0};
  std::atomic<int> reused{0};

  parallel_for(tasks.size(), config.jobs, [&](std::size_t i) {
    const Task& task = tasks[i];
    const std::string out_path =
        (fs::path(config.out_dir) / task.rel_path).string();

    ManifestEntry entry;
    entry.corruption = task.corruption;
    entry.level = task.level;
    entry.image = task.image_id;
    entry.path = task.rel_path;

    if (const ManifestEntry* old =
            previous.find(task.corruption, task.level, task.image_id)) {
      if (fs::exists(out_path) && Sha256::hex_file(out_path) == old->sha256) {
        entry.sha256 = old->sha256;
        entries[i] = std::move(entry);
        reused.fetch_add(1);
        return;
      }
    }

    // one decoded source per thread; consecutive tasks share it
    thread_local std::string cached_key;
    thread_local PixelBuffer cached_image(1, 1);
    const std::string key =
        std::to_string(run_serial) + ":" + task.source->string();
    if (cached_key != key) {
      cached_image = read_image(task.source->string());
      cached_key = key;
    }

    const CorruptionSpec spec =
        resolve_spec(task.corruption, task.level, config.table,
                     root.fork(task.image_id).root());
    const PixelBuffer corrupted = apply(spec, cached_image);
    const std::vector<uint8_t> png = encode_png(corrupted);
    atomic_write_file(out_path, png.data(), png.size());
    entry.sha256 = Sha256::hex(png);
    entries[i] = std::move(entry);
    written.fetch_add(1);
  });

  GenerateResult result;
  result.manifest.dataset = config.dataset_name.empty()
                                ? fs::path(config.images_dir).filename().string()
                                : config.dataset_name;
  result.manifest.root_seed = config.seed;
  result.manifest.severity_version = config.table.version();
  result.manifest.entries = std::move(entries);
  result.written = written.load();
  result.reused = reused.load();
  result.manifest.save(manifest_path);
  return result;
}

}  // namespace vrb
