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

// vrb: generate corrupted image datasets, evaluate prediction grids, and
// report robustness metrics.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vrb/corruptions.hpp"
#include "vrb/dataset.hpp"
#include "vrb/error.hpp"
#include "vrb/generate.hpp"
#include "vrb/grid.hpp"
#include "vrb/imageio.hpp"
#include "vrb/metrics.hpp"
#include "vrb/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string> parse_list(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void parse_levels(const std::string& text, int* lo, int* hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      *lo = *hi = std::stoi(text);
    } else {
      *lo = std::stoi(text.substr(0, dots));
      *hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw vrb::Error("cannot parse level range '" + text + "' (use e.g. 1..5)");
  }
  if (*lo < 1 || *hi > 5 || *lo > *hi) {
    throw vrb::Error("level range must lie within 1..5");
  }
}

vrb::SeverityTable load_table(const std::string& path) {
  if (path.empty()) return vrb::SeverityTable::builtin();
  return vrb::SeverityTable::load(path);
}

void write_run_config(const std::string& out_dir, const json& config) {
  fs::create_directories(out_dir);
  vrb::atomic_write_file((fs::path(out_dir) / "run_config.json").string(),
                         config.dump(2) + "\n");
}

// ---------------------------------------------------------------------------

int cmd_generate(const std::string& images, const std::string& out,
                 const std::string& corruptions_csv, const std::string& levels,
                 uint64_t seed, const std::string& table_path, int jobs,
                 const std::string& dataset_name) {
  vrb::GenerateConfig config;
  config.images_dir = images;
  config.out_dir = out;
  config.corruptions = parse_list(corruptions_csv);
  if (config.corruptions.size() == 1 && config.corruptions[0] == "all") {
    config.corruptions.clear();
    for (const auto& info : vrb::corruption_catalog()) {
      config.corruptions.push_back(info.id);
    }
  }
  parse_levels(levels, &config.level_lo, &config.level_hi);
  config.seed = seed;
  config.table = load_table(table_path);
  vrb::validate_table(config.table);
  config.jobs = jobs;
  config.dataset_name = dataset_name;

  const vrb::GenerateResult result = vrb::generate_dataset(config);

  json rc;
  rc["command"] = "generate";
  rc["images"] = images;
  rc["out"] = out;
  rc["corruptions"] = config.corruptions.empty()
                          ? vrb::benchmark_corruption_ids()
                          : config.corruptions;
  rc["levels"] = {config.level_lo, config.level_hi};
  rc["seed"] = seed;
  rc["severity_table"] = table_path.empty() ? "<builtin>" : table_path;
  rc["severity_table_version"] = config.table.version();
  rc["dataset"] = result.manifest.dataset;
  write_run_config(out, rc);

  std::printf("generated %d file(s), reused %d, manifest %s\n", result.written,
              result.reused,
              (fs::path(out) / "manifest.json").string().c_str());
  return 0;
}

// ---------------------------------------------------------------------------

// Prediction tree layout: <dir>/<model>/clean.json plus
// <dir>/<model>/<corruption>/<level>.json for levels 1..5.
std::vector<vrb::PredictionSet> load_prediction_tree(
    const std::string& dir, const std::vector<vrb::QARecord>& dataset) {
  if (!fs::is_directory(dir)) {
    throw vrb::Error("prediction directory '" + dir + "' does not exist");
  }
  std::vector<std::string> models;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory()) models.push_back(entry.path().filename().string());
  }
  std::sort(models.begin(), models.end());
  if (models.empty()) {
    throw vrb::Error("no model directories under '" + dir + "'");
  }

  std::vector<vrb::PredictionSet> sets;
  for (const std::string& model : models) {
    const fs::path model_dir = fs::path(dir) / model;
    const fs::path clean = model_dir / "clean.json";
    if (!fs::exists(clean)) {
      throw vrb::Error("missing clean predictions: " + clean.string());
    }
    sets.push_back(
        vrb::load_predictions(clean.string(), model, "clean", 0, dataset));

    std::vector<std::string> corruption_dirs;
    for (const auto& entry : fs::directory_iterator(model_dir)) {
      if (entry.is_directory()) {
        corruption_dirs.push_back(entry.path().filename().string());
      }
    }
    // known corruptions first, in catalog order, then the rest
    std::sort(corruption_dirs.begin(), corruption_dirs.end(),
              [](const std::string& a, const std::string& b) {
                auto rank = [](const std::string& id) {
                  const auto& catalog = vrb::corruption_catalog();
                  for (std::size_t i = 0; i < catalog.size(); ++i) {
                    if (catalog[i].id == id) return static_cast<int>(i);
                  }
                  return static_cast<int>(catalog.size());
                };
                const int ra = rank(a), rb = rank(b);
                return ra != rb ? ra < rb : a < b;
              });
    for (const std::string& corruption : corruption_dirs) {
      for (int level = 1; level <= 5; ++level) {
        const fs::path file =
            model_dir / corruption / (std::to_string(level) + ".json");
        if (!fs::exists(file)) {
          throw vrb::Error("missing prediction file for cell " + model + "/" +
                           corruption + "/" + std::to_string(level) + ": " +
                           file.string());
        }
        sets.push_back(vrb::load_predictions(file.string(), model, corruption,
                                             level, dataset));
      }
    }
  }
  return sets;
}

int cmd_evaluate(const std::string& questions_path,
                 const std::string& annotations_path,
                 const std::string& predictions_dir, const std::string& out_path,
                 bool no_normalize) {
  const auto questions = vrb::load_questions(questions_path);
  const auto annotations = vrb::load_annotations(annotations_path);
  const auto dataset = vrb::join_dataset(questions, annotations);
  const auto sets = load_prediction_tree(predictions_dir, dataset);
  const auto cells = vrb::join_predictions(dataset, sets);
  const vrb::EvaluationGrid grid = vrb::build_grid(cells, !no_normalize);
  grid.write_csv(out_path);

  json rc;
  rc["command"] = "evaluate";
  rc["questions"] = questions_path;
  rc["annotations"] = annotations_path;
  rc["predictions"] = predictions_dir;
  rc["normalize"] = !no_normalize;
  rc["questions_count"] = dataset.size();
  const fs::path out_dir = fs::path(out_path).parent_path();
  write_run_config(out_dir.empty() ? "." : out_dir.string(), rc);

  std::printf("wrote grid (%d models x %d corruptions x %d levels) to %s\n",
              grid.model_count(), grid.corruption_count(),
              vrb::EvaluationGrid::kLevels, out_path.c_str());
  return 0;
}

// ---------------------------------------------------------------------------

vrb::WeightVector resolve_weights(const std::string& weights_csv,
                                  const std::vector<std::string>& prefer) {
  if (!weights_csv.empty() && !prefer.empty()) {
    throw vrb::Error("--weights and --prefer are mutually exclusive");
  }
  if (!weights_csv.empty()) {
    std::vector<double> w;
    for (const std::string& tok : parse_list(weights_csv)) {
      try {
        w.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw vrb::Error("cannot parse weight '" + tok + "'");
      }
    }
    return vrb::WeightVector::from_weights(w);
  }
  if (!prefer.empty()) {
    std::vector<double> prefs(vrb::kSubMetricCount, 0.0);
    for (const std::string& item : prefer) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw vrb::Error("--prefer expects name=score, got '" + item + "'");
      }
      const std::string name = item.substr(0, eq);
      const int idx = vrb::sub_metric_from_name(name);
      if (idx < 0) {
        std::string valid;
        for (const auto& n : vrb::sub_metric_names()) {
          valid += valid.empty() ? n : ", " + n;
        }
        throw vrb::Error("unknown sub-metric '" + name + "' (valid: " + valid +
                         ")");
      }
      try {
        prefs[idx] = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw vrb::Error("cannot parse preference score in '" + item + "'");
      }
    }
    return vrb::WeightVector::softmax(prefs);
  }
  return vrb::WeightVector::equal();
}

int cmd_report(const std::string& grid_path, const std::string& out_dir,
               const std::string& weights_csv,
               const std::vector<std::string>& prefer) {
  const vrb::WeightVector weights = resolve_weights(weights_csv, prefer);
  const vrb::EvaluationGrid grid = vrb::EvaluationGrid::read_csv(grid_path);
  const vrb::MetricReport report = vrb::compute_report(grid, weights);
  vrb::write_report_files(report, grid, out_dir);

  json rc;
  rc["command"] = "report";
  rc["grid"] = grid_path;
  json w = json::object();
  for (int m = 0; m < vrb::kSubMetricCount; ++m) {
    w[vrb::sub_metric_names()[m]] = report.weights[m];
  }
  rc["weights"] = std::move(w);
  write_run_config(out_dir, rc);

  for (const std::string& warning : report.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  std::printf("wrote report for %d model(s), %d corruption(s) to %s\n",
              static_cast<int>(report.models.size()),
              static_cast<int>(report.corruptions.size()), out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"visual robustness benchmark toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "apply corruptions to an image set");
  std::string gen_images, gen_out, gen_corruptions, gen_levels = "1..5";
  std::string gen_table, gen_dataset;
  uint64_t gen_seed = 0;
  int gen_jobs = 0;
  gen->add_option("--images", gen_images, "input image directory")->required();
  gen->add_option("--out", gen_out, "output root")->required();
  gen->add_option("--corruptions", gen_corruptions,
                  "comma-separated corruption ids (default: the 14 benchmark "
                  "corruptions; 'all' = every registered corruption)");
  gen->add_option("--levels", gen_levels, "severity level range, e.g. 1..5");
  gen->add_option("--seed", gen_seed, "root seed");
  gen->add_option("--severity-table", gen_table,
                  "severity table file (default: built-in v1 table)");
  gen->add_option("--jobs", gen_jobs, "worker count (default: logical CPUs)");
  gen->add_option("--dataset-name", gen_dataset,
                  "dataset name recorded in the manifest");

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "score predictions into a grid");
  std::string eval_questions, eval_annotations, eval_predictions, eval_out;
  bool eval_no_normalize = false;
  eval->add_option("--questions", eval_questions, "questions JSON")->required();
  eval->add_option("--annotations", eval_annotations, "annotations JSON")
      ->required();
  eval->add_option("--predictions", eval_predictions,
                   "prediction tree: <model>/clean.json + "
                   "<model>/<corruption>/<level>.json")
      ->required();
  eval->add_option("--out", eval_out, "output grid CSV")->required();
  eval->add_flag("--no-normalize", eval_no_normalize,
                 "match answers bit-exactly instead of normalizing");

  // report
  auto* rep = app.add_subcommand("report", "compute metrics and VRE from a grid");
  std::string rep_grid, rep_out, rep_weights;
  std::vector<std::string> rep_prefer;
  rep->add_option("--grid", rep_grid, "grid CSV from 'evaluate'")->required();
  rep->add_option("--out", rep_out, "output directory")->required();
  rep->add_option("--weights", rep_weights,
                  "five explicit sub-metric weights summing to 1, e.g. "
                  "0.2,0.2,0.2,0.2,0.2");
  rep->add_option("--prefer", rep_prefer,
                  "preference score name=value (repeatable); converted to "
                  "weights by softmax");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_images, gen_out, gen_corruptions, gen_levels,
                          gen_seed, gen_table, gen_jobs, gen_dataset);
    }
    if (eval->parsed()) {
      return cmd_evaluate(eval_questions, eval_annotations, eval_predictions,
                          eval_out, eval_no_normalize);
    }
    if (rep->parsed()) {
      return cmd_report(rep_grid, rep_out, rep_weights, rep_prefer);
    }
  } catch (const vrb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
