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

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace vrb {

/// Parameter record for one (corruption, level) pair.
class ParamRecord {
 public:
  bool has(const std::string& name) const;

  double num(const std::string& name) const;
  double num(const std::string& name, double fallback) const;
  int integer(const std::string& name) const;
  std::string str(const std::string& name, const std::string& fallback) const;

  void set(const std::string& name, double value);
  void set(const std::string& name, const std::string& value);

  std::vector<std::string> keys() const;

 private:
  std::map<std::string, std::variant<double, std::string>> values_;
};

// Per-corruption severity parameters, loaded from a key/value text file:
//
//   version = 1
//   [gaussian_noise]
//   sigma = 0.08, 0.12, 0.18, 0.26, 0.38
//
// Each key carries five comma-separated values (one per level 1..5) or a
// single value that applies to every level. Lines starting with '#' are
// comments. Exactly five records exist per corruption; level 0 never
// consults the table (it is the identity by definition).
class SeverityTable {
 public:
  static constexpr int kLevels = 5;

  static SeverityTable parse(const std::string& text, const std::string& origin);
  static SeverityTable load(const std::string& path);

  /// The table compiled into the library; identical to the shipped
  /// data/severity_v1.conf.
  static const SeverityTable& builtin();
  static const char* builtin_text();

  int version() const { return version_; }
  bool has(const std::string& corruption) const;
  const ParamRecord& record(const std::string& corruption, int level) const;
  std::vector<std::string> corruption_ids() const;

 private:
  int version_ = 0;
  std::map<std::string, std::array<ParamRecord, kLevels>> entries_;
};

}  // namespace vrb
