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

#include "satgame/games/resource_allocation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "satgame/errors.h"
#include "satgame/random.h"

namespace satgame {
namespace {

double Consume(ServiceMode mode, double demand, double remaining) {
  if (mode == ServiceMode::kPartial) return std::min(demand, std::max(remaining, 0.0));
  return remaining >= demand ? demand : 0.0;
}

void CheckOrder(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw ArgumentError("serving order must list all " + std::to_string(n) + " agents");
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (int agent : order) {
    if (agent < 0 || agent >= n || seen[agent]) {
      throw ArgumentError("serving order is not a permutation");
    }
    seen[agent] = 1;
  }
}

class ResourceCorrespondence final : public Correspondence {
 public:
  explicit ResourceCorrespondence(ResourceInstance instance) : instance_(std::move(instance)) {}

  bool IsDeterministic() const override { return false; }

  EnvSample SampleEnv(Rng& rng) const override {
    EnvSample env;
    env.values.resize(instance_.num_agents());
    std::iota(env.values.begin(), env.values.end(), 0);
    std::shuffle(env.values.begin(), env.values.end(), rng);
    return env;
  }

  void SatisfyingActions(PlayerId player, const JointAction& profile, const EnvSample& env,
                         std::span<std::uint8_t> row) const override {
    CheckOrder(env.values, instance_.num_agents());
    std::vector<double> used(instance_.num_resources(), 0.0);
    for (int agent : env.values) {
      if (agent == player) break;
      const int j = profile[agent];
      used[j] += Consume(instance_.service, instance_.demands[agent],
                         instance_.capacities[j] - used[j]);
    }
    Mark(player, used, row);
  }

  void FillTable(const JointAction& profile, const EnvSample& env,
                 SatisfactionTable& table) const override {
    CheckOrder(env.values, instance_.num_agents());
    std::vector<double>& used = scratch();
    used.assign(instance_.num_resources(), 0.0);
    for (int agent : env.values) {
      Mark(agent, used, table.Row(agent));
      const int j = profile[agent];
      used[j] += Consume(instance_.service, instance_.demands[agent],
                         instance_.capacities[j] - used[j]);
    }
  }

  const ResourceInstance& instance() const { return instance_; }

 private:
  // Agent is served in full at j iff the capacity left ahead of it covers
  // its demand.
  void Mark(int agent, const std::vector<double>& used, std::span<std::uint8_t> row) const {
    const double demand = instance_.demands[agent];
    for (int j = 0; j < instance_.num_resources(); ++j) {
      row[j] = instance_.capacities[j] - used[j] >= demand ? 1 : 0;
    }
  }

  static std::vector<double>& scratch() {
    thread_local std::vector<double> buffer;
    return buffer;
  }

  ResourceInstance instance_;
};

}  // namespace

double ResourceInstance::AverageDemand() const {
  return demands.empty() ? 0.0
                         : std::accumulate(demands.begin(), demands.end(), 0.0) / demands.size();
}

double ResourceInstance::AverageCapacity() const {
  return capacities.empty()
             ? 0.0
             : std::accumulate(capacities.begin(), capacities.end(), 0.0) / capacities.size();
}

void ResourceInstance::Validate() const {
  if (demands.size() < 2) throw ArgumentError("resource game needs at least two agents");
  if (capacities.empty()) throw ArgumentError("resource game needs at least one resource");
  for (double g : demands) {
    if (!(g > 0.0) || !std::isfinite(g)) throw ArgumentError("demands must be positive");
  }
  for (double c : capacities) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw ArgumentError("capacities must be >= 0");
  }
}

ResourceInstance MakeResourceInstance(const ResourceDraw& draw, std::uint64_t seed) {
  if (draw.agents < 2 || draw.resources < 1) {
    throw ConfigError("resource draw needs >= 2 agents and >= 1 resource");
  }
  if (!(draw.demand_min > 0.0 && draw.demand_max >= draw.demand_min)) {
    throw ConfigError("demand range must be positive and ordered");
  }
  if (!(draw.capacity_min >= 0.0 && draw.capacity_max >= draw.capacity_min)) {
    throw ConfigError("capacity range must be non-negative and ordered");
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> demand(draw.demand_min, draw.demand_max);
  std::uniform_real_distribution<double> capacity(draw.capacity_min, draw.capacity_max);
  auto inside = [](const std::optional<std::pair<double, double>>& window, double value) {
    return !window || (value >= window->first && value <= window->second);
  };
  for (int attempt = 0; attempt < draw.max_attempts; ++attempt) {
    ResourceInstance instance;
    instance.service = draw.service;
    instance.demands.resize(draw.agents);
    instance.capacities.resize(draw.resources);
    for (double& g : instance.demands) g = demand(rng);
    for (double& c : instance.capacities) c = capacity(rng);
    if (inside(draw.average_demand, instance.AverageDemand()) &&
        inside(draw.average_capacity, instance.AverageCapacity())) {
      return instance;
    }
  }
  throw ConfigError("no resource instance matched the requested averages after " +
                    std::to_string(draw.max_attempts) + " draws");
}

std::vector<double> ResourceAllocate(const ResourceInstance& instance, const JointAction& a,
                                     std::span<const int> order) {
  if (a.size() != instance.num_agents()) throw ArgumentError("profile size mismatch");
  for (int agent = 0; agent < a.size(); ++agent) {
    if (a[agent] < 0 || a[agent] >= instance.num_resources()) {
      throw ArgumentError("agent " + std::to_string(agent) + " picked an unknown resource");
    }
  }
  CheckOrder(order, instance.num_agents());
  std::vector<double> used(instance.num_resources(), 0.0);
  std::vector<double> allocation(instance.num_agents(), 0.0);
  for (int agent : order) {
    const int j = a[agent];
    allocation[agent] =
        Consume(instance.service, instance.demands[agent], instance.capacities[j] - used[j]);
    used[j] += allocation[agent];
  }
  return allocation;
}

double AllocationEfficiency(const ResourceInstance& instance,
                            std::span<const double> allocations) {
  const double capacity =
      std::accumulate(instance.capacities.begin(), instance.capacities.end(), 0.0);
  const double demand = std::accumulate(instance.demands.begin(), instance.demands.end(), 0.0);
  const double deliverable = std::min(capacity, demand);
  if (!(deliverable > 0.0)) return 1.0;
  return std::accumulate(allocations.begin(), allocations.end(), 0.0) / deliverable;
}

GameDefinition MakeResourceGame(ResourceInstance instance) {
  instance.Validate();
  std::vector<int> counts(instance.num_agents(), instance.num_resources());
  return GameDefinition("resource_allocation", std::move(counts),
                        std::make_shared<ResourceCorrespondence>(std::move(instance)));
}

const ResourceInstance* AsResourceInstance(const GameDefinition& game) {
  const auto* resource = dynamic_cast<const ResourceCorrespondence*>(&game.correspondence());
  return resource == nullptr ? nullptr : &resource->instance();
}

}  // namespace satgame
