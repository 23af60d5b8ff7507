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

#include "vrb/severity.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vrb/error.hpp"

namespace vrb {

namespace detail {
const char* builtin_severity_text();  // generated from data/severity_v1.conf
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
  return parts;
}

bool parse_number(const std::string& s, double* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

}  // namespace

bool ParamRecord::has(const std::string& name) const {
  return values_.count(name) > 0;
}

double ParamRecord::num(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw Error("missing parameter '" + name + "'");
  if (const double* v = std::get_if<double>(&it->second)) return *v;
  throw Error("parameter '" + name + "' is not numeric");
}

double ParamRecord::num(const std::string& name, double fallback) const {
  return has(name) ? num(name) : fallback;
}

int ParamRecord::integer(const std::string& name) const {
  const double v = num(name);
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9) {
    throw Error("parameter '" + name + "' must be an integer");
  }
  return static_cast<int>(r);
}

std::string ParamRecord::str(const std::string& name,
                             const std::string& fallback) const {
  const auto it = values_.find(name);
  if (it == values_.end()) return fallback;
  if (const std::string* v = std::get_if<std::string>(&it->second)) return *v;
  throw Error("parameter '" + name + "' is not a string");
}

void ParamRecord::set(const std::string& name, double value) {
  values_[name] = value;
}

void ParamRecord::set(const std::string& name, const std::string& value) {
  values_[name] = value;
}

std::vector<std::string> ParamRecord::keys() const {
  std::vector<std::string> out;
  out.reserve(values_.size());
  for (const auto& [k, v] : values_) out.push_back(k);
  return out;
}

SeverityTable SeverityTable::parse(const std::string& text,
                                   const std::string& origin) {
  SeverityTable table;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  bool version_seen = false;

  auto fail = [&](const std::string& msg) {
    throw Error(origin + ":" + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail("malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) fail("empty section name");
      if (table.entries_.count(section)) fail("duplicate section '" + section + "'");
      table.entries_[section] = {};
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail("empty key");

    if (section.empty()) {
      if (key == "version") {
        double v;
        if (!parse_number(value, &v)) fail("version must be an integer");
        table.version_ = static_cast<int>(v);
        version_seen = true;
        continue;
      }
      fail("key '" + key + "' outside any section");
    }

    const std::vector<std::string> parts = split(value, ',');
    if (parts.size() != 1 && parts.size() != kLevels) {
      fail("key '" + key + "' needs 1 or " + std::to_string(kLevels) + " values");
    }
    auto& records = table.entries_[section];
    if (records[0].has(key)) fail("duplicate key '" + key + "'");
    for (int level = 0; level < kLevels; ++level) {
      const std::string& token = parts.size() == 1 ? parts[0] : parts[level];
      if (token.empty()) fail("empty value for key '" + key + "'");
      double num;
      if (parse_number(token, &num)) {
        records[level].set(key, num);
      } else {
        records[level].set(key, token);
      }
    }
  }

  if (!version_seen) throw Error(origin + ": missing 'version' entry");
  return table;
}

SeverityTable SeverityTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open severity table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const SeverityTable& SeverityTable::builtin() {
  static const SeverityTable table =
      parse(detail::builtin_severity_text(), "<builtin>");
  return table;
}

const char* SeverityTable::builtin_text() {
  return detail::builtin_severity_text();
}

bool SeverityTable::has(const std::string& corruption) const {
  return entries_.count(corruption) > 0;
}

const ParamRecord& SeverityTable::record(const std::string& corruption,
                                         int level) const {
  const auto it = entries_.find(corruption);
  if (it == entries_.end()) {
    throw Error("no severity records for corruption '" + corruption + "'");
  }
  if (level < 1 || level > kLevels) {
    throw Error("severity level must be in [1," + std::to_string(kLevels) +
                "], got " + std::to_string(level));
  }
  return it->second[level - 1];
}

std::vector<std::string> SeverityTable::corruption_ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

}  // namespace vrb
