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

#ifndef SATGAME_GAMES_TABLE_GAME_H_
#define SATGAME_GAMES_TABLE_GAME_H_

#include <cstdint>
#include <string>
#include <vector>

#include "satgame/game.h"
#include "satgame/random.h"

namespace satgame {

// Dense correspondence tables: flags[i][k * |A_i| + b] is 1 when b is in
// f_i(a_{-i}), with k the mixed-radix index of a_{-i} (other players in
// order, last player fastest).
using CorrespondenceTables = std::vector<std::vector<std::uint8_t>>;

std::uint64_t OpponentIndex(std::span<const int> action_counts, const JointAction& profile,
                            PlayerId i);

GameDefinition MakeTableGame(std::string name, std::vector<int> action_counts,
                             CorrespondenceTables flags);

// Each membership flag is set independently with probability `density`.
GameDefinition RandomTableGame(std::vector<int> action_counts, double density, Rng& rng);

// Tabulates any deterministic game small enough to enumerate.
CorrespondenceTables Tabulate(const GameDefinition& game,
                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace satgame

#endif  // SATGAME_GAMES_TABLE_GAME_H_
