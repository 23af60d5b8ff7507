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

#include "vrb/answers.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "vrb/error.hpp"

namespace vrb {
namespace {

const std::map<std::string, std::string>& number_words() {
  static const std::map<std::string, std::string> words = {
      {"zero", "0"}, {"one", "1"}, {"two", "2"},   {"three", "3"},
      {"four", "4"}, {"five", "5"}, {"six", "6"},  {"seven", "7"},
      {"eight", "8"}, {"nine", "9"}, {"ten", "10"}};
  return words;
}

bool is_article(const std::string& token) {
  return token == "a" || token == "an" || token == "the";
}

}  // namespace

std::string normalize_answer(const std::string& raw) {
  std::string lowered;
  lowered.reserve(raw.size());
  for (unsigned char c : raw) {
    if (std::ispunct(c)) {
      lowered.push_back(' ');
    } else {
      lowered.push_back(static_cast<char>(std::tolower(c)));
    }
  }

  std::istringstream in(lowered);
  std::string token;
  std::string out;
  while (in >> token) {
    if (is_article(token)) continue;
    const auto it = number_words().find(token);
    const std::string& word = it != number_words().end() ? it->second : token;
    if (!out.empty()) out.push_back(' ');
    out += word;
  }
  return out;
}

double vqa_accuracy(const std::string& predicted,
                    const std::vector<std::string>& human_answers) {
  if (human_answers.empty()) {
    throw Error("vqa_accuracy requires at least one human answer");
  }
  const auto matches = std::count(human_answers.begin(), human_answers.end(),
                                  predicted);
  return std::min(static_cast<double>(matches) / 3.0, 1.0);
}

}  // namespace vrb
