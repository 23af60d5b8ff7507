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

#include "vrb/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "vrb/answers.hpp"
#include "vrb/error.hpp"
#include "vrb/imageio.hpp"

namespace vrb {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) fields.push_back(cur);
  return fields;
}

}  // namespace

EvaluationGrid::EvaluationGrid(std::vector<std::string> models,
                               std::vector<std::string> corruptions)
    : models_(std::move(models)), corruptions_(std::move(corruptions)) {
  if (models_.empty() || corruptions_.empty()) {
    throw Error("grid requires at least one model and one corruption");
  }
  acc_.assign(models_.size() * corruptions_.size() * kLevels, 0.0);
}

int EvaluationGrid::model_index(const std::string& name) const {
  const auto it = std::find(models_.begin(), models_.end(), name);
  return it == models_.end() ? -1 : static_cast<int>(it - models_.begin());
}

int EvaluationGrid::corruption_index(const std::string& name) const {
  const auto it = std::find(corruptions_.begin(), corruptions_.end(), name);
  return it == corruptions_.end() ? -1
                                  : static_cast<int>(it - corruptions_.begin());
}

void EvaluationGrid::set_accuracy(int v, int c, int l, double a) {
  if (a < 0.0 || a > 1.0 || !std::isfinite(a)) {
    throw Error("accuracy must lie in [0,1]");
  }
  acc_[index(v, c, l)] = a;
}

void EvaluationGrid::validate() const {
  for (int v = 0; v < model_count(); ++v) {
    const double clean = accuracy(v, 0, 0);
    for (int c = 1; c < corruption_count(); ++c) {
      if (accuracy(v, c, 0) != clean) {
        throw Error("clean accuracy for model '" + models_[v] +
                    "' differs across corruptions");
      }
    }
  }
}

std::string EvaluationGrid::to_csv() const {
  std::ostringstream out;
  out << "model,corruption,level,accuracy,error\n";
  char buf[128];
  for (int v = 0; v < model_count(); ++v) {
    for (int c = 0; c < corruption_count(); ++c) {
      for (int l = 0; l < kLevels; ++l) {
        const double a = accuracy(v, c, l);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", a, 1.0 - a);
        out << models_[v] << ',' << corruptions_[c] << ',' << l << ',' << buf
            << '\n';
      }
    }
  }
  return out.str();
}

void EvaluationGrid::write_csv(const std::string& path) const {
  atomic_write_file(path, to_csv());
}

EvaluationGrid EvaluationGrid::read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open grid file '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw Error(path + ": empty grid file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "model,corruption,level,accuracy,error") {
    throw Error(path + ": unexpected header '" + line + "'");
  }

  struct Row {
    std::string model, corruption;
    int level;
    double accuracy;
  };
  std::vector<Row> rows;
  std::vector<std::string> models, corruptions;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 5) {
      throw Error(path + ":" + std::to_string(lineno) + ": expected 5 fields");
    }
    Row row;
    row.model = f[0];
    row.corruption = f[1];
    try {
      row.level = std::stoi(f[2]);
      row.accuracy = std::stod(f[3]);
      const double err = std::stod(f[4]);
      if (std::abs((1.0 - row.accuracy) - err) > 1e-12) {
        throw Error(path + ":" + std::to_string(lineno) +
                    ": error column is not 1 - accuracy");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(path + ":" + std::to_string(lineno) + ": malformed number");
    }
    if (row.level < 0 || row.level >= kLevels) {
      throw Error(path + ":" + std::to_string(lineno) + ": level out of range");
    }
    if (std::find(models.begin(), models.end(), row.model) == models.end()) {
      models.push_back(row.model);
    }
    if (std::find(corruptions.begin(), corruptions.end(), row.corruption) ==
        corruptions.end()) {
      corruptions.push_back(row.corruption);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(path + ": no grid rows");

  EvaluationGrid grid(models, corruptions);
  std::vector<bool> seen(grid.acc_.size(), false);
  for (const Row& row : rows) {
    const int v = grid.model_index(row.model);
    const int c = grid.corruption_index(row.corruption);
    const std::size_t idx = grid.index(v, c, row.level);
    if (seen[idx]) {
      throw Error(path + ": duplicate cell " + row.model + "/" +
                  row.corruption + "/" + std::to_string(row.level));
    }
    seen[idx] = true;
    grid.set_accuracy(v, c, row.level, row.accuracy);
  }
  for (int v = 0; v < grid.model_count(); ++v) {
    for (int c = 0; c < grid.corruption_count(); ++c) {
      for (int l = 0; l < kLevels; ++l) {
        if (!seen[grid.index(v, c, l)]) {
          throw Error(path + ": missing cell " + grid.models_[v] + "/" +
                      grid.corruptions_[c] + "/" + std::to_string(l));
        }
      }
    }
  }
  grid.validate();
  return grid;
}

EvaluationGrid build_grid(const std::vector<JoinedCell>& cells, bool normalize) {
  if (cells.empty()) throw Error("cannot build a grid from zero cells");

  std::vector<std::string> models, corruptions;
  for (const JoinedCell& cell : cells) {
    if (std::find(models.begin(), models.end(), cell.model) == models.end()) {
      models.push_back(cell.model);
    }
    if (std::find(corruptions.begin(), corruptions.end(), cell.corruption) ==
        corruptions.end()) {
      corruptions.push_back(cell.corruption);
    }
  }

  // all cells must agree on the question set
  std::set<int64_t> reference;
  for (const auto& [rec, pred] : cells.front().rows) {
    reference.insert(rec->question_id);
  }
  EvaluationGrid grid(models, corruptions);
  for (const JoinedCell& cell : cells) {
    std::set<int64_t> qids;
    for (const auto& [rec, pred] : cell.rows) qids.insert(rec->question_id);
    if (qids != reference) {
      throw Error("cell " + cell.model + "/" + cell.corruption + "/" +
                  std::to_string(cell.level) +
                  " covers a different question set");
    }
  }

  for (const JoinedCell& cell : cells) {
    if (cell.rows.empty()) {
      throw Error("cell " + cell.model + "/" + cell.corruption + "/" +
                  std::to_string(cell.level) + " has no questions");
    }
    double sum = 0.0;
    for (const auto& [rec, pred] : cell.rows) {
      if (normalize) {
        std::vector<std::string> answers;
        answers.reserve(rec->human_answers.size());
        for (const std::string& a : rec->human_answers) {
          answers.push_back(normalize_answer(a));
        }
        sum += vqa_accuracy(normalize_answer(*pred), answers);
      } else {
        sum += vqa_accuracy(*pred, rec->human_answers);
      }
    }
    const int v = grid.model_index(cell.model);
    const int c = grid.corruption_index(cell.corruption);
    grid.set_accuracy(v, c, cell.level, sum / cell.rows.size());
  }
  grid.validate();
  return grid;
}

}  // namespace vrb
