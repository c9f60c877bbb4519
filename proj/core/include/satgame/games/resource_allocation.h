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

#ifndef SATGAME_GAMES_RESOURCE_ALLOCATION_H_
#define SATGAME_GAMES_RESOURCE_ALLOCATION_H_

// N agents each pick one of M resources. A resource serves the agents that
// picked it one at a time, in a uniformly random order shared by all
// resources, until its capacity runs out. An agent is satisfied when it
// receives its full demand.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "satgame/game.h"

namespace satgame {

enum class ServiceMode {
  kPartial,      // the agent that exhausts a resource keeps the remainder
  kAllOrNothing  // agents that cannot be fully served receive nothing
};

struct ResourceInstance {
  std::vector<double> demands;     // Gamma_i > 0
  std::vector<double> capacities;  // C_j >= 0
  ServiceMode service = ServiceMode::kPartial;

  int num_agents() const { return static_cast<int>(demands.size()); }
  int num_resources() const { return static_cast<int>(capacities.size()); }
  double AverageDemand() const;
  double AverageCapacity() const;
  void Validate() const;
};

struct ResourceDraw {
  int agents = 20;
  int resources = 10;
  double demand_min = 1.0;
  double demand_max = 5.0;
  double capacity_min = 0.0;
  double capacity_max = 10.0;
  // Redraw until the realized averages land inside these windows.
  std::optional<std::pair<double, double>> average_demand;
  std::optional<std::pair<double, double>> average_capacity;
  ServiceMode service = ServiceMode::kPartial;
  int max_attempts = 1'000'000;
};

// Demands ~ U[demand_min, demand_max], capacities ~ U[capacity_min,
// capacity_max]. Bit-identical for a fixed seed.
ResourceInstance MakeResourceInstance(const ResourceDraw& draw, std::uint64_t seed);

// order[k] is the agent served k-th.
std::vector<double> ResourceAllocate(const ResourceInstance& instance, const JointAction& a,
                                     std::span<const int> order);

// Units delivered over min(total capacity, total demand).
double AllocationEfficiency(const ResourceInstance& instance,
                            std::span<const double> allocations);

// Environment samples are serving permutations.
GameDefinition MakeResourceGame(ResourceInstance instance);

// The instance behind a game built by MakeResourceGame, or nullptr.
const ResourceInstance* AsResourceInstance(const GameDefinition& game);

}  // namespace satgame

#endif  // SATGAME_GAMES_RESOURCE_ALLOCATION_H_
