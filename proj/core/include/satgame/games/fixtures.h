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

#ifndef SATGAME_GAMES_FIXTURES_H_
#define SATGAME_GAMES_FIXTURES_H_

// Two-player, two-action games with closed-form equilibrium sets.

#include <string>
#include <vector>

#include "satgame/game.h"

namespace satgame {

// f_1(a_2) = {a_2}, f_2(a_1) = {a_1}.
GameDefinition MatchingGame();
// f_1(a_2) = {a_2}, f_2(a_1) = {1 - a_1}.
GameDefinition MismatchGame();
// f_1(a_2) = {a_2}, f_2 always empty.
GameDefinition NeverSatisfiableGame();
// f_1 = A_1 everywhere, f_2(a_1) = {a_1}.
GameDefinition UniversalClippingGame();

struct FixtureGame {
  std::string name;
  GameDefinition game;
  std::vector<JointAction> expected_se;
  std::vector<JointAction> expected_gse;
  std::vector<std::vector<ActionId>> expected_clipping;  // per player
};

std::vector<FixtureGame> FixtureGames();

}  // namespace satgame

#endif  // SATGAME_GAMES_FIXTURES_H_
