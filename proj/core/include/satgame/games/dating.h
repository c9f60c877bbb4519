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

#ifndef SATGAME_GAMES_DATING_H_
#define SATGAME_GAMES_DATING_H_

// Two groups of N players pick a partner in the other group. Players
// 0..N-1 are the alphas, N..2N-1 the betas; every action is a partner index
// in [0, N).

#include <vector>

#include "satgame/game.h"

namespace satgame {

struct DatingInstance {
  int n = 0;
  std::vector<std::vector<int>> alpha_acceptable;  // B_i: betas acceptable to alpha_i
  std::vector<std::vector<int>> beta_acceptable;   // A_j: alphas acceptable to beta_j

  void Validate() const;
  // Swaps the roles of the two groups.
  DatingInstance Transposed() const;
};

struct DatingSets {
  std::vector<std::vector<int>> alpha;  // f_i^1 for each alpha
  std::vector<std::vector<int>> beta;   // f_j^2 for each beta
};

// alpha_i may pick beta_k when beta_k is acceptable to it, beta_k picks
// alpha_i, and no other alpha picks beta_k; symmetrically for betas.
DatingSets DatingSatisfyingSets(const DatingInstance& instance, const JointAction& profile);

GameDefinition MakeDatingGame(DatingInstance instance);

}  // namespace satgame

#endif  // SATGAME_GAMES_DATING_H_
