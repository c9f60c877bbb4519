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

#ifndef SATGAME_INI_H_
#define SATGAME_INI_H_

// Sectioned "key = value" text used by game, pmf and preset files.
//
//   # comment            ; also a comment
//   [section]
//   key = value
//
// Every entry remembers its line so that semantic errors can point at it.

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace satgame {

struct IniEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct IniSection {
  std::string name;
  int line = 0;
  std::vector<IniEntry> entries;

  const IniEntry* Find(std::string_view key) const;
};

class IniDocument {
 public:
  IniDocument() = default;

  static IniDocument Parse(std::string_view text, std::string source = "<string>");
  static IniDocument Load(const std::filesystem::path& path);

  const std::string& source() const { return source_; }
  const std::vector<IniSection>& sections() const { return sections_; }
  const IniSection* Section(std::string_view name) const;
  const IniSection& RequireSection(std::string_view name) const;

  bool Has(std::string_view section, std::string_view key) const;
  std::string GetString(std::string_view section, std::string_view key,
                        std::optional<std::string> fallback = std::nullopt) const;
  double GetDouble(std::string_view section, std::string_view key,
                   std::optional<double> fallback = std::nullopt) const;
  std::int64_t GetInt(std::string_view section, std::string_view key,
                      std::optional<std::int64_t> fallback = std::nullopt) const;
  bool GetBool(std::string_view section, std::string_view key,
               std::optional<bool> fallback = std::nullopt) const;
  std::vector<double> GetDoubles(std::string_view section, std::string_view key) const;
  std::vector<std::int64_t> GetInts(std::string_view section, std::string_view key) const;

  // Rejects keys outside `allowed` in `section`.
  void CheckKeys(std::string_view section, std::initializer_list<std::string_view> allowed) const;

  // Adds or replaces an entry (line 0 marks an override).
  void Set(std::string_view section, std::string_view key, std::string value);

  // Copy without the named sections.
  IniDocument Without(std::initializer_list<std::string_view> names) const;

  [[noreturn]] void Fail(int line, const std::string& message) const;

 private:
  const IniEntry& Require(std::string_view section, std::string_view key) const;

  std::string source_ = "<string>";
  std::vector<IniSection> sections_;
};

// Whitespace- or comma-separated tokens.
std::vector<std::string> SplitList(std::string_view text);

}  // namespace satgame

#endif  // SATGAME_INI_H_
