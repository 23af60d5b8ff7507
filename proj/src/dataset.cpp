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

#include "vrb/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vrb/error.hpp"

namespace vrb {
namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("failed to parse '" + path + "': " + e.what());
  }
  return j;
}

std::string cell_name(const std::string& model, const std::string& corruption,
                      int level) {
  return model + "/" + corruption + "/" + std::to_string(level);
}

}  // namespace

std::vector<QuestionEntry> load_questions(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object() || !j.contains("questions") || !j["questions"].is_array()) {
    throw Error(path + ": expected a top-level \"questions\" array");
  }
  const json& arr = j["questions"];
  if (arr.empty()) {
    std::cerr << "warning: " << path << " contains no questions\n";
  }

  std::vector<QuestionEntry> out;
  out.reserve(arr.size());
  std::set<int64_t> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& q = arr[i];
    if (!q.is_object() || !q.contains("question_id") ||
        !q["question_id"].is_number_integer() || !q.contains("image_id") ||
        !q.contains("question") || !q["question"].is_string()) {
      throw Error(path + ": malformed question record at index " +
                  std::to_string(i));
    }
    QuestionEntry entry;
    entry.question_id = q["question_id"].get<int64_t>();
    entry.image_id = q["image_id"].get<int64_t>();
    entry.question = q["question"].get<std::string>();
    if (!seen.insert(entry.question_id).second) {
      throw Error(path + ": duplicate question_id " +
                  std::to_string(entry.question_id));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::map<int64_t, AnnotationEntry> load_annotations(const std::string& path) {
  const json j = load_json(path);
  if (!j.is_object() || !j.contains("annotations") ||
      !j["annotations"].is_array()) {
    throw Error(path + ": expected a top-level \"annotations\" array");
  }

  std::map<int64_t, AnnotationEntry> out;
  const json& arr = j["annotations"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& a = arr[i];
    if (!a.is_object() || !a.contains("question_id") ||
        !a["question_id"].is_number_integer() || !a.contains("answers") ||
        !a["answers"].is_array()) {
      throw Error(path + ": malformed annotation record at index " +
                  std::to_string(i));
    }
    const int64_t qid = a["question_id"].get<int64_t>();
    if (out.count(qid)) {
      throw Error(path + ": duplicate annotation for question_id " +
                  std::to_string(qid));
    }
    AnnotationEntry entry;
    for (const json& ans : a["answers"]) {
      if (ans.is_object() && ans.contains("answer") && ans["answer"].is_string()) {
        entry.answers.push_back(ans["answer"].get<std::string>());
      } else if (ans.is_string()) {
        entry.answers.push_back(ans.get<std::string>());
      } else {
        throw Error(path + ": malformed answer entry for question_id " +
                    std::to_string(qid));
      }
    }
    if (entry.answers.empty()) {
      throw Error(path + ": question_id " + std::to_string(qid) +
                  " has no answers");
    }
    if (a.contains("multiple_choice_answer") &&
        a["multiple_choice_answer"].is_string()) {
      entry.ground_truth = a["multiple_choice_answer"].get<std::string>();
    }
    out.emplace(qid, std::move(entry));
  }
  return out;
}

std::vector<QARecord> join_dataset(
    const std::vector<QuestionEntry>& questions,
    const std::map<int64_t, AnnotationEntry>& annotations) {
  std::vector<QARecord> out;
  out.reserve(questions.size());
  std::set<int64_t> question_ids;
  for (const QuestionEntry& q : questions) {
    question_ids.insert(q.question_id);
    const auto it = annotations.find(q.question_id);
    if (it == annotations.end()) {
      throw Error("question_id " + std::to_string(q.question_id) +
                  " has no annotations");
    }
    QARecord rec;
    rec.question_id = q.question_id;
    rec.image_id = q.image_id;
    rec.question = q.question;
    rec.human_answers = it->second.answers;
    rec.ground_truth = it->second.ground_truth;
    out.push_back(std::move(rec));
  }
  for (const auto& [qid, entry] : annotations) {
    if (!question_ids.count(qid)) {
      throw Error("annotation for question_id " + std::to_string(qid) +
                  " has no matching question");
    }
  }
  std::sort(out.begin(), out.end(),
            [](const QARecord& a, const QARecord& b) {
              return a.question_id < b.question_id;
            });
  return out;
}

PredictionSet load_predictions(const std::string& path, const std::string& model,
                               const std::string& corruption, int level,
                               const std::vector<QARecord>& dataset) {
  const json j = load_json(path);
  if (!j.is_array()) {
    throw Error(path + ": expected a JSON array of {question_id, answer}");
  }

  PredictionSet set;
  set.model = model;
  set.corruption = corruption;
  set.level = level;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    if (!e.is_object() || !e.contains("question_id") ||
        !e["question_id"].is_number_integer() || !e.contains("answer") ||
        !e["answer"].is_string()) {
      throw Error(path + ": malformed prediction at index " + std::to_string(i));
    }
    const int64_t qid = e["question_id"].get<int64_t>();
    if (!set.answers.emplace(qid, e["answer"].get<std::string>()).second) {
      throw Error(path + ": duplicate prediction for question_id " +
                  std::to_string(qid));
    }
  }

  std::vector<int64_t> missing;
  for (const QARecord& rec : dataset) {
    if (!set.answers.count(rec.question_id)) missing.push_back(rec.question_id);
  }
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << path << ": missing predictions for " << missing.size()
        << " question(s):";
    for (std::size_t i = 0; i < missing.size() && i < 10; ++i) {
      msg << ' ' << missing[i];
    }
    if (missing.size() > 10) msg << " ...";
    throw Error(msg.str());
  }
  if (set.answers.size() != dataset.size()) {
    throw Error(path + ": " +
                std::to_string(set.answers.size() - dataset.size()) +
                " prediction(s) reference unknown question ids");
  }
  return set;
}

std::vector<JoinedCell> join_predictions(const std::vector<QARecord>& dataset,
                                         const std::vector<PredictionSet>& sets) {
  if (dataset.empty()) throw Error("empty dataset");

  std::vector<std::string> models;
  std::vector<std::string> corruptions;
  std::map<std::string, const PredictionSet*> clean_by_model;
  std::map<std::string, const PredictionSet*> by_cell;

  for (const PredictionSet& set : sets) {
    if (std::find(models.begin(), models.end(), set.model) == models.end()) {
      models.push_back(set.model);
    }
    if (set.level == 0) {
      if (clean_by_model.count(set.model)) {
        throw Error("duplicate clean prediction set for model '" + set.model + "'");
      }
      clean_by_model[set.model] = &set;
      continue;
    }
    if (set.level < 1 || set.level > 5) {
      throw Error("prediction level out of range for " +
                  cell_name(set.model, set.corruption, set.level));
    }
    if (std::find(corruptions.begin(), corruptions.end(), set.corruption) ==
        corruptions.end()) {
      corruptions.push_back(set.corruption);
    }
    const std::string key = cell_name(set.model, set.corruption, set.level);
    if (by_cell.count(key)) throw Error("duplicate prediction set for " + key);
    by_cell[key] = &set;
  }

  if (corruptions.empty()) throw Error("no corrupted prediction sets given");

  auto make_cell = [&](const std::string& model, const std::string& corruption,
                       int level, const PredictionSet& set) {
    JoinedCell cell;
    cell.model = model;
    cell.corruption = corruption;
    cell.level = level;
    cell.rows.reserve(dataset.size());
    for (const QARecord& rec : dataset) {
      const auto it = set.answers.find(rec.question_id);
      if (it == set.answers.end()) {
        throw Error("missing prediction for question_id " +
                    std::to_string(rec.question_id) + " in " +
                    cell_name(model, corruption, level));
      }
      cell.rows.emplace_back(&rec, &it->second);
    }
    return cell;
  };

  std::vector<JoinedCell> cells;
  for (const std::string& model : models) {
    const auto clean = clean_by_model.find(model);
    if (clean == clean_by_model.end()) {
      throw Error("model '" + model + "' has no clean (level 0) prediction set");
    }
    for (const std::string& corruption : corruptions) {
      // the shared clean run populates level 0 of every corruption
      cells.push_back(make_cell(model, corruption, 0, *clean->second));
      for (int level = 1; level <= 5; ++level) {
        const auto it = by_cell.find(cell_name(model, corruption, level));
        if (it == by_cell.end()) {
          throw Error("missing prediction set for cell " +
                      cell_name(model, corruption, level));
        }
        cells.push_back(make_cell(model, corruption, level, *it->second));
      }
    }
  }
  return cells;
}

}  // namespace vrb
