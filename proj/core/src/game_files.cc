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

#include "satgame/game_files.h"

#include <cstdio>
#include <sstream>
#include <tuple>

#include "satgame/errors.h"
#include "satgame/games/dating.h"
#include "satgame/games/fixtures.h"
#include "satgame/games/rat_selection.h"
#include "satgame/games/table_game.h"

namespace satgame {
namespace {

std::vector<int> ParseActions(const IniDocument& doc, const IniEntry& e, std::string_view text) {
  std::vector<int> out;
  for (const auto& token : SplitList(text)) {
    if (token == "-" || token == "{}") continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      doc.Fail(e.line, "expected action indices, got '" + token + "'");
    }
  }
  return out;
}

GameDefinition BuildTableGame(const IniDocument& doc) {
  doc.CheckKeys("game", {"family", "name", "actions"});
  std::vector<int> counts;
  for (auto c : doc.GetInts("game", "actions")) counts.push_back(static_cast<int>(c));
  if (counts.size() < 2) doc.Fail(doc.RequireSection("game").line, "need at least two players");
  for (int c : counts) {
    if (c < 1) doc.Fail(doc.RequireSection("game").line, "action counts must be positive");
  }
  const int n = static_cast<int>(counts.size());
  CorrespondenceTables flags(n);
  for (PlayerId i = 0; i < n; ++i) {
    std::uint64_t rows = CountProfiles(counts, kDefaultEnumerationCap) / counts[i];
    flags[i].assign(rows * counts[i], 0);
  }
  for (const auto& section : doc.sections()) {
    if (section.name == "game") continue;
    if (!section.name.starts_with("player.")) {
      doc.Fail(section.line, "unexpected section [" + section.name + "]");
    }
    int i = -1;
    try {
      i = std::stoi(section.name.substr(7));
    } catch (const std::exception&) {
    }
    if (i < 0 || i >= n) doc.Fail(section.line, "bad player index in [" + section.name + "]");
    for (const auto& e : section.entries) {
      std::vector<int> opponents = ParseActions(doc, e, e.key);
      if (static_cast<int>(opponents.size()) != n - 1) {
        doc.Fail(e.line, "expected " + std::to_string(n - 1) + " opponent actions");
      }
      JointAction profile = InsertAction(opponents, i, 0);
      for (PlayerId j = 0; j < n; ++j) {
        if (profile[j] < 0 || profile[j] >= counts[j]) {
          doc.Fail(e.line, "action out of range for player " + std::to_string(j));
        }
      }
      const std::uint64_t k = OpponentIndex(counts, profile, i);
      for (int b : ParseActions(doc, e, e.value)) {
        if (b < 0 || b >= counts[i]) doc.Fail(e.line, "satisfying action out of range");
        flags[i][k * counts[i] + b] = 1;
      }
    }
  }
  return MakeTableGame(doc.GetString("game", "name", "table"), std::move(counts),
                       std::move(flags));
}

GameDefinition BuildFixture(const IniDocument& doc) {
  doc.CheckKeys("game", {"family", "fixture"});
  const std::string name = doc.GetString("game", "fixture");
  for (auto& fixture : FixtureGames()) {
    if (fixture.name == name) return fixture.game;
  }
  doc.Fail(doc.RequireSection("game").Find("fixture")->line, "unknown fixture '" + name + "'");
}

ServiceMode ParseService(const IniDocument& doc) {
  const std::string s = doc.GetString("game", "service", "partial");
  if (s == "partial") return ServiceMode::kPartial;
  if (s == "all_or_nothing") return ServiceMode::kAllOrNothing;
  doc.Fail(doc.RequireSection("game").Find("service")->line,
           "service must be partial or all_or_nothing");
}

std::pair<double, double> Range(const IniDocument& doc, std::string_view key) {
  auto v = doc.GetDoubles("game", key);
  if (v.size() != 2 || v[0] > v[1]) {
    doc.Fail(doc.RequireSection("game").Find(key)->line,
             "'" + std::string(key) + "' expects 'low high'");
  }
  return {v[0], v[1]};
}

GameDefinition BuildResource(const IniDocument& doc, std::optional<std::uint64_t> seed) {
  doc.CheckKeys("game", {"family", "demands", "capacities", "service", "agents", "resources",
                         "demand_range", "capacity_range", "average_demand",
                         "average_capacity", "instance_seed"});
  if (!IsRandomResourceGame(doc)) {
    ResourceInstance instance;
    instance.demands = doc.GetDoubles("game", "demands");
    instance.capacities = doc.GetDoubles("game", "capacities");
    instance.service = ParseService(doc);
    try {
      return MakeResourceGame(std::move(instance));
    } catch (const ArgumentError& e) {
      doc.Fail(doc.RequireSection("game").line, e.what());
    }
  }
  const ResourceDraw draw = ParseResourceDraw(doc);
  std::uint64_t instance_seed = 0;
  if (doc.Has("game", "instance_seed")) {
    instance_seed = static_cast<std::uint64_t>(doc.GetInt("game", "instance_seed"));
  } else if (seed) {
    instance_seed = *seed;
  } else {
    doc.Fail(doc.RequireSection("game").line,
             "random resource instance needs instance_seed (or an experiment seed)");
  }
  return MakeResourceGame(MakeResourceInstance(draw, instance_seed));
}

GameDefinition BuildRat(const IniDocument& doc) {
  doc.CheckKeys("game", {"family", "users", "wifi_stations", "lte_stations", "wifi_capacity",
                         "lte_capacity", "threshold", "capacities", "kinds"});
  try {
    if (doc.Has("game", "capacities")) {
      RatInstance instance;
      instance.num_users = static_cast<int>(doc.GetInt("game", "users", 100));
      instance.threshold = doc.GetDouble("game", "threshold");
      instance.capacities = doc.GetDoubles("game", "capacities");
      std::vector<std::string> kinds =
          doc.Has("game", "kinds") ? SplitList(doc.GetString("game", "kinds"))
                                   : std::vector<std::string>(instance.capacities.size(), "lte");
      for (const auto& k : kinds) {
        if (k == "wifi") {
          instance.kinds.push_back(StationKind::kWifi);
        } else if (k == "lte") {
          instance.kinds.push_back(StationKind::kLte);
        } else {
          doc.Fail(doc.RequireSection("game").Find("kinds")->line, "kinds are wifi or lte");
        }
      }
      return MakeRatGame(std::move(instance));
    }
    RatParams params;
    params.num_users = static_cast<int>(doc.GetInt("game", "users", params.num_users));
    params.num_wifi = static_cast<int>(doc.GetInt("game", "wifi_stations", params.num_wifi));
    params.num_lte = static_cast<int>(doc.GetInt("game", "lte_stations", params.num_lte));
    params.wifi_capacity = doc.GetDouble("game", "wifi_capacity", params.wifi_capacity);
    params.lte_capacity = doc.GetDouble("game", "lte_capacity", params.lte_capacity);
    params.threshold = doc.GetDouble("game", "threshold", params.threshold);
    return MakeRatGame(MakeRatInstance(params));
  } catch (const ArgumentError& e) {
    doc.Fail(doc.RequireSection("game").line, e.what());
  }
}

GameDefinition BuildDating(const IniDocument& doc) {
  doc.CheckKeys("game", {"family", "n"});
  DatingInstance instance;
  instance.n = static_cast<int>(doc.GetInt("game", "n"));
  if (instance.n < 1) doc.Fail(doc.RequireSection("game").line, "n must be >= 1");
  instance.alpha_acceptable.resize(instance.n);
  instance.beta_acceptable.resize(instance.n);
  for (const auto& section : doc.sections()) {
    if (section.name == "game") continue;
    if (section.name != "alpha" && section.name != "beta") {
      doc.Fail(section.line, "unexpected section [" + section.name + "]");
    }
    auto& target = section.name == "alpha" ? instance.alpha_acceptable : instance.beta_acceptable;
    for (const auto& e : section.entries) {
      std::vector<int> who = ParseActions(doc, e, e.key);
      if (who.size() != 1 || who[0] < 0 || who[0] >= instance.n) {
        doc.Fail(e.line, "expected a single player index in [0, n)");
      }
      for (int k : ParseActions(doc, e, e.value)) {
        if (k < 0 || k >= instance.n) doc.Fail(e.line, "partner index out of range");
        target[who[0]].push_back(k);
      }
    }
  }
  return MakeDatingGame(std::move(instance));
}

}  // namespace

bool IsRandomResourceGame(const IniDocument& doc) {
  return !doc.Has("game", "demands") && !doc.Has("game", "capacities");
}

ResourceDraw ParseResourceDraw(const IniDocument& doc) {
  ResourceDraw draw;
  draw.agents = static_cast<int>(doc.GetInt("game", "agents", draw.agents));
  draw.resources = static_cast<int>(doc.GetInt("game", "resources", draw.resources));
  if (doc.Has("game", "demand_range")) {
    std::tie(draw.demand_min, draw.demand_max) = Range(doc, "demand_range");
  }
  if (doc.Has("game", "capacity_range")) {
    std::tie(draw.capacity_min, draw.capacity_max) = Range(doc, "capacity_range");
  }
  if (doc.Has("game", "average_demand")) draw.average_demand = Range(doc, "average_demand");
  if (doc.Has("game", "average_capacity")) draw.average_capacity = Range(doc, "average_capacity");
  draw.service = ParseService(doc);
  return draw;
}

GameDefinition BuildGame(const IniDocument& doc, std::optional<std::uint64_t> instance_seed) {
  const std::string family = doc.GetString("game", "family");
  if (family == "table") return BuildTableGame(doc);
  if (family == "fixture") return BuildFixture(doc);
  if (family == "resource") return BuildResource(doc, instance_seed);
  if (family == "rat") return BuildRat(doc);
  if (family == "dating") return BuildDating(doc);
  doc.Fail(doc.RequireSection("game").Find("family")->line,
           "unknown game family '" + family + "'");
}

GameDefinition LoadGameFile(const std::filesystem::path& path) {
  return BuildGame(IniDocument::Load(path));
}

JointPmf ParsePmf(const IniDocument& doc, const GameDefinition& game) {
  const IniSection& section = doc.RequireSection("pmf");
  JointPmf pmf;
  for (const auto& e : section.entries) {
    std::vector<int> actions = ParseActions(doc, e, e.key);
    JointAction profile(std::move(actions));
    try {
      game.ValidateProfile(profile);
    } catch (const ArgumentError& err) {
      doc.Fail(e.line, err.what());
    }
    char* end = nullptr;
    const double p = std::strtod(e.value.c_str(), &end);
    if (end == e.value.c_str() || *end != '\0' || !(p >= 0.0)) {
      doc.Fail(e.line, "expected a non-negative probability, got '" + e.value + "'");
    }
    pmf.Add(profile, p);
  }
  try {
    pmf.Validate(game);
  } catch (const ArgumentError& err) {
    doc.Fail(section.line, err.what());
  }
  return pmf;
}

JointPmf LoadPmfFile(const std::filesystem::path& path, const GameDefinition& game) {
  return ParsePmf(IniDocument::Load(path), game);
}

std::string DescribeGame(const GameDefinition& game) {
  std::ostringstream out;
  out << game.name() << " players=" << game.num_players();
  char buffer[64];
  if (const ResourceInstance* r = AsResourceInstance(game)) {
    std::snprintf(buffer, sizeof(buffer), " resources=%d avg_capacity=%.4f avg_demand=%.4f",
                  r->num_resources(), r->AverageCapacity(), r->AverageDemand());
    out << buffer << " service="
        << (r->service == ServiceMode::kPartial ? "partial" : "all_or_nothing");
  } else if (const RatInstance* rat = AsRatInstance(game)) {
    out << " stations=" << rat->num_stations();
    std::snprintf(buffer, sizeof(buffer), " threshold=%.4f", rat->threshold);
    out << buffer << " capacities=";
    for (int b = 0; b < rat->num_stations(); ++b) {
      std::snprintf(buffer, sizeof(buffer), "%s%g", b == 0 ? "" : ":", rat->capacities[b]);
      out << buffer;
    }
  } else {
    out << " actions=";
    for (int i = 0; i < game.num_players(); ++i) out << (i ? ":" : "") << game.num_actions(i);
  }
  return out.str();
}

}  // namespace satgame
