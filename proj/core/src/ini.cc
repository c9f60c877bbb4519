// Copyright 2026 The Satgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "satgame/ini.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "satgame/errors.h"

namespace satgame {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
std::optional<T> ParseNumber(std::string_view text) {
  text = Trim(text);
  T value{};
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

const IniEntry* IniSection::Find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

IniDocument IniDocument::Parse(std::string_view text, std::string source) {
  IniDocument doc;
  doc.source_ = std::move(source);
  IniSection* current = nullptr;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    // Inline comments start at '#' or ';'.
    if (std::size_t hash = line.find_first_of("#;"); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') doc.Fail(line_no, "unterminated section header");
      std::string name(Trim(line.substr(1, line.size() - 2)));
      if (name.empty()) doc.Fail(line_no, "empty section name");
      if (doc.Section(name) != nullptr) doc.Fail(line_no, "duplicate section [" + name + "]");
      doc.sections_.push_back(IniSection{name, line_no, {}});
      current = &doc.sections_.back();
    } else {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) doc.Fail(line_no, "expected 'key = value'");
      if (current == nullptr) doc.Fail(line_no, "entry outside of any [section]");
      std::string key(Trim(line.substr(0, eq)));
      std::string value(Trim(line.substr(eq + 1)));
      if (key.empty()) doc.Fail(line_no, "empty key");
      if (current->Find(key) != nullptr) {
        doc.Fail(line_no, "duplicate key '" + key + "' in [" + current->name + "]");
      }
      current->entries.push_back(IniEntry{std::move(key), std::move(value), line_no});
    }
    if (end == text.size()) break;
  }
  return doc;
}

IniDocument IniDocument::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path.string());
}

const IniSection* IniDocument::Section(std::string_view name) const {
  for (const auto& s : sections_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const IniSection& IniDocument::RequireSection(std::string_view name) const {
  const IniSection* s = Section(name);
  if (s == nullptr) Fail(0, "missing section [" + std::string(name) + "]");
  return *s;
}

bool IniDocument::Has(std::string_view section, std::string_view key) const {
  const IniSection* s = Section(section);
  return s != nullptr && s->Find(key) != nullptr;
}

const IniEntry& IniDocument::Require(std::string_view section, std::string_view key) const {
  const IniSection& s = RequireSection(section);
  const IniEntry* e = s.Find(key);
  if (e == nullptr) {
    Fail(s.line, "missing key '" + std::string(key) + "' in [" + std::string(section) + "]");
  }
  return *e;
}

std::string IniDocument::GetString(std::string_view section, std::string_view key,
                                   std::optional<std::string> fallback) const {
  if (fallback && !Has(section, key)) return *fallback;
  return Require(section, key).value;
}

double IniDocument::GetDouble(std::string_view section, std::string_view key,
                              std::optional<double> fallback) const {
  if (fallback && !Has(section, key)) return *fallback;
  const IniEntry& e = Require(section, key);
  auto v = ParseNumber<double>(e.value);
  if (!v) Fail(e.line, "'" + e.key + "' expects a number, got '" + e.value + "'");
  return *v;
}

std::int64_t IniDocument::GetInt(std::string_view section, std::string_view key,
                                 std::optional<std::int64_t> fallback) const {
  if (fallback && !Has(section, key)) return *fallback;
  const IniEntry& e = Require(section, key);
  auto v = ParseNumber<std::int64_t>(e.value);
  if (!v) Fail(e.line, "'" + e.key + "' expects an integer, got '" + e.value + "'");
  return *v;
}

bool IniDocument::GetBool(std::string_view section, std::string_view key,
                          std::optional<bool> fallback) const {
  if (fallback && !Has(section, key)) return *fallback;
  const IniEntry& e = Require(section, key);
  if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no") return false;
  Fail(e.line, "'" + e.key + "' expects true/false, got '" + e.value + "'");
}

std::vector<double> IniDocument::GetDoubles(std::string_view section, std::string_view key) const {
  const IniEntry& e = Require(section, key);
  std::vector<double> out;
  for (const auto& token : SplitList(e.value)) {
    auto v = ParseNumber<double>(token);
    if (!v) Fail(e.line, "'" + e.key + "' has a non-numeric entry '" + token + "'");
    out.push_back(*v);
  }
  return out;
}

std::vector<std::int64_t> IniDocument::GetInts(std::string_view section,
                                               std::string_view key) const {
  const IniEntry& e = Require(section, key);
  std::vector<std::int64_t> out;
  for (const auto& token : SplitList(e.value)) {
    auto v = ParseNumber<std::int64_t>(token);
    if (!v) Fail(e.line, "'" + e.key + "' has a non-integer entry '" + token + "'");
    out.push_back(*v);
  }
  return out;
}

void IniDocument::CheckKeys(std::string_view section,
                            std::initializer_list<std::string_view> allowed) const {
  const IniSection* s = Section(section);
  if (s == nullptr) return;
  for (const auto& e : s->entries) {
    if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end()) {
      Fail(e.line, "unknown key '" + e.key + "' in [" + s->name + "]");
    }
  }
}

void IniDocument::Set(std::string_view section, std::string_view key, std::string value) {
  IniSection* s = nullptr;
  for (auto& candidate : sections_) {
    if (candidate.name == section) s = &candidate;
  }
  if (s == nullptr) {
    sections_.push_back(IniSection{std::string(section), 0, {}});
    s = &sections_.back();
  }
  for (auto& e : s->entries) {
    if (e.key == key) {
      e.value = std::move(value);
      e.line = 0;
      return;
    }
  }
  s->entries.push_back(IniEntry{std::string(key), std::move(value), 0});
}

void IniDocument::Fail(int line, const std::string& message) const {
  throw ParseError(source_, line, message);
}

IniDocument IniDocument::Without(std::initializer_list<std::string_view> names) const {
  IniDocument out;
  out.source_ = source_;
  for (const auto& section : sections_) {
    bool drop = false;
    for (auto n : names) drop = drop || section.name == n;
    if (!drop) out.sections_.push_back(section);
  }
  return out;
}

}  // namespace satgame
