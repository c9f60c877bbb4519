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

#ifndef SATGAME_GAMES_RAT_SELECTION_H_
#define SATGAME_GAMES_RAT_SELECTION_H_

// Users pick a base station; every user on a station gets an equal share of
// its capacity and is satisfied when that share reaches a common threshold.

#include <string>
#include <vector>

#include "satgame/game.h"

namespace satgame {

enum class StationKind { kWifi, kLte };

struct RatInstance {
  int num_users = 100;
  std::vector<double> capacities;  // Mbps per station
  std::vector<StationKind> kinds;
  double threshold = 1.5;  // Mbps

  int num_stations() const { return static_cast<int>(capacities.size()); }
  void Validate() const;
};

struct RatParams {
  int num_users = 100;
  int num_wifi = 5;
  int num_lte = 5;
  double wifi_capacity = 20.0;
  double lte_capacity = 24.0;
  double threshold = 1.5;
};

// WiFi stations first, then LTE.
RatInstance MakeRatInstance(const RatParams& params);

// capacity(b) / load(b) for each user.
std::vector<double> RatThroughput(const RatInstance& instance, const JointAction& a);

GameDefinition MakeRatGame(RatInstance instance);

const RatInstance* AsRatInstance(const GameDefinition& game);

}  // namespace satgame

#endif  // SATGAME_GAMES_RAT_SELECTION_H_
