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

#include <string>
#include <vector>

#include "vrb/dataset.hpp"

namespace vrb {

/// Accuracy/error tensor over (model, corruption, level 0..5).
/// Error is always exactly 1 - accuracy.
class EvaluationGrid {
 public:
  static constexpr int kLevels = 6;  // 0 (clean) .. 5

  EvaluationGrid(std::vector<std::string> models,
                 std::vector<std::string> corruptions);

  const std::vector<std::string>& models() const { return models_; }
  const std::vector<std::string>& corruptions() const { return corruptions_; }
  int model_count() const { return static_cast<int>(models_.size()); }
  int corruption_count() const { return static_cast<int>(corruptions_.size()); }

  int model_index(const std::string& name) const;       // -1 if absent
  int corruption_index(const std::string& name) const;  // -1 if absent

  double accuracy(int v, int c, int l) const { return acc_[index(v, c, l)]; }
  double error(int v, int c, int l) const { return 1.0 - acc_[index(v, c, l)]; }
  void set_accuracy(int v, int c, int l, double a);

  /// Checks value ranges and that clean accuracy is identical across
  /// corruptions for each model.
  void validate() const;

  std::string to_csv() const;  // header model,corruption,level,accuracy,error
  void write_csv(const std::string& path) const;
  static EvaluationGrid read_csv(const std::string& path);

 private:
  std::size_t index(int v, int c, int l) const {
    return (static_cast<std::size_t>(v) * corruptions_.size() + c) * kLevels + l;
  }

  std::vector<std::string> models_;
  std::vector<std::string> corruptions_;
  std::vector<double> acc_;
};

/// Mean per-question VQA accuracy per cell. When normalize is set (the
/// default), predictions and human answers pass through normalize_answer
/// before matching.
EvaluationGrid build_grid(const std::vector<JoinedCell>& cells, bool normalize = true);

}  // namespace vrb
