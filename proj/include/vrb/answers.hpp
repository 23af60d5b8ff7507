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

namespace vrb {

/// Canonical answer form used on both sides of the match: lowercase,
/// punctuation stripped, articles (a/an/the) dropped, the number words
/// zero..ten mapped to digits, whitespace collapsed.
std::string normalize_answer(const std::string& raw);

/// min(matches / 3, 1) with matches counted over the full human answer
/// list. Inputs are compared verbatim; normalize first if desired.
double vqa_accuracy(const std::string& predicted,
                    const std::vector<std::string>& human_answers);

}  // namespace vrb
