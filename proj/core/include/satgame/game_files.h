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

#ifndef SATGAME_GAME_FILES_H_
#define SATGAME_GAME_FILES_H_

// Game and pmf files.
//
// A game file has a [game] section whose `family` selects the schema:
//
//   family = table       actions = 2 2, plus [player.<i>] sections mapping
//                        "opponent actions" = "satisfying actions" ('-' for
//                        the empty set; missing rows are empty)
//   family = fixture     fixture = matching | mismatch | never_satisfiable |
//                        universal_clipping
//   family = resource    demands/capacities lists, or a random draw via
//                        agents, resources, demand_range, capacity_range,
//                        average_demand, average_capacity, instance_seed;
//                        service = partial | all_or_nothing
//   family = rat         users, wifi_stations, lte_stations, wifi_capacity,
//                        lte_capacity, threshold (or capacities + kinds)
//   family = dating      n, plus [alpha] / [beta] sections mapping a player
//                        index to its acceptable partners
//
// A pmf file has one [pmf] section of "a_1 a_2 ... a_N = probability" lines.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "satgame/equilibrium.h"
#include "satgame/game.h"
#include "satgame/games/resource_allocation.h"
#include "satgame/ini.h"

namespace satgame {

// `instance_seed` is used when the document asks for a random resource
// instance without fixing `instance_seed` itself.
GameDefinition BuildGame(const IniDocument& doc,
                         std::optional<std::uint64_t> instance_seed = std::nullopt);
GameDefinition LoadGameFile(const std::filesystem::path& path);

// Random-draw parameters of a resource [game] section.
ResourceDraw ParseResourceDraw(const IniDocument& doc);
bool IsRandomResourceGame(const IniDocument& doc);

JointPmf ParsePmf(const IniDocument& doc, const GameDefinition& game);
JointPmf LoadPmfFile(const std::filesystem::path& path, const GameDefinition& game);

// One-line description used in output headers.
std::string DescribeGame(const GameDefinition& game);

}  // namespace satgame

#endif  // SATGAME_GAME_FILES_H_
