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

#include "satgame/games/fixtures.h"

namespace satgame {

GameDefinition MatchingGame() {
  return MakeGame("matching", {2, 2}, [](PlayerId i, ActionId b, const JointAction& a) {
    return b == a[1 - i];
  });
}

GameDefinition MismatchGame() {
  return MakeGame("mismatch", {2, 2}, [](PlayerId i, ActionId b, const JointAction& a) {
    return i == 0 ? b == a[1] : b == 1 - a[0];
  });
}

GameDefinition NeverSatisfiableGame() {
  return MakeGame("never_satisfiable", {2, 2},
                  [](PlayerId i, ActionId b, const JointAction& a) {
                    return i == 0 && b == a[1];
                  });
}

GameDefinition UniversalClippingGame() {
  return MakeGame("universal_clipping", {2, 2},
                  [](PlayerId i, ActionId b, const JointAction& a) {
                    return i == 0 || b == a[0];
                  });
}

std::vector<FixtureGame> FixtureGames() {
  return {
      {"matching", MatchingGame(), {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}, {{}, {}}},
      {"mismatch", MismatchGame(), {}, {}, {{}, {}}},
      {"never_satisfiable", NeverSatisfiableGame(), {}, {{0, 0}, {1, 1}}, {{}, {}}},
      {"universal_clipping", UniversalClippingGame(), {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}},
       {{0, 1}, {}}},
  };
}

}  // namespace satgame
