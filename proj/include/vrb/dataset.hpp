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
#include <map>
#include <string>
#include <vector>

namespace vrb {

/// One question joined with its human annotations.
struct QARecord {
  int64_t question_id = 0;
  int64_t image_id = 0;
  std::string question;
  std::vector<std::string> human_answers;  // verbatim, >= 1 (10 in VQAv2)
  std::string ground_truth;                // multiple-choice answer, diagnostic only
};

struct QuestionEntry {
  int64_t question_id = 0;
  int64_t image_id = 0;
  std::string question;
};

struct AnnotationEntry {
  std::vector<std::string> answers;
  std::string ground_truth;
};

/// Predictions for one (model, corruption, level) cell. The clean run uses
/// corruption "clean" and level 0 and stands in for level 0 of every
/// corruption when joining.
struct PredictionSet {
  std::string model;
  std::string corruption;
  int level = 0;
  std::map<int64_t, std::string> answers;  // question_id -> predicted answer
};

// VQAv2-schema readers: {"questions": [...]} and {"annotations": [...]}.
std::vector<QuestionEntry> load_questions(const std::string& path);
std::map<int64_t, AnnotationEntry> load_annotations(const std::string& path);

/// Join questions with annotations; errors name any question without
/// annotations (and vice versa). Output is sorted by question id.
std::vector<QARecord> join_dataset(const std::vector<QuestionEntry>& questions,
                                   const std::map<int64_t, AnnotationEntry>& annotations);

/// Prediction file: a JSON array of {"question_id": int, "answer": string}.
/// Coverage is validated against the dataset: missing or extra ids error.
PredictionSet load_predictions(const std::string& path, const std::string& model,
                               const std::string& corruption, int level,
                               const std::vector<QARecord>& dataset);

/// One grid cell after joining: per-question (record, prediction) rows in
/// question-id order.
struct JoinedCell {
  std::string model;
  std::string corruption;
  int level = 0;
  std::vector<std::pair<const QARecord*, const std::string*>> rows;
};

/// Expands each model's clean set into level 0 of every corruption and
/// validates that every (model, corruption, level) cell is present exactly
/// once with full coverage.
std::vector<JoinedCell> join_predictions(const std::vector<QARecord>& dataset,
                                         const std::vector<PredictionSet>& sets);

}  // namespace vrb
