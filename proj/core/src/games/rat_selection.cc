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

#include "satgame/games/rat_selection.h"

#include <cmath>
#include <string>
#include <utility>

#include "satgame/errors.h"

namespace satgame {
namespace {

class RatCorrespondence final : public Correspondence {
 public:
  explicit RatCorrespondence(RatInstance instance) : instance_(std::move(instance)) {}

  void SatisfyingActions(PlayerId player, const JointAction& profile, const EnvSample&,
                         std::span<std::uint8_t> row) const override {
    std::vector<int> load(instance_.num_stations(), 0);
    for (PlayerId u = 0; u < profile.size(); ++u) {
      if (u != player) ++load[profile[u]];
    }
    for (int b = 0; b < instance_.num_stations(); ++b) row[b] = Satisfies(b, load[b] + 1);
  }

  void FillTable(const JointAction& profile, const EnvSample&,
                 SatisfactionTable& table) const override {
    const int stations = instance_.num_stations();
    std::vector<int> load(stations, 0);
    for (ActionId b : profile) ++load[b];
    // Joining b from elsewhere gives load + 1; staying keeps load.
    std::vector<std::uint8_t> join(stations);
    std::vector<std::uint8_t> stay(stations);
    for (int b = 0; b < stations; ++b) {
      join[b] = Satisfies(b, load[b] + 1);
      stay[b] = load[b] > 0 ? Satisfies(b, load[b]) : 0;
    }
    for (PlayerId u = 0; u < profile.size(); ++u) {
      auto row = table.Row(u);
      for (int b = 0; b < stations; ++b) row[b] = join[b];
      row[profile[u]] = stay[profile[u]];
    }
  }

  const RatInstance& instance() const { return instance_; }

 private:
  std::uint8_t Satisfies(int station, int load) const {
    return instance_.capacities[station] / load >= instance_.threshold ? 1 : 0;
  }

  RatInstance instance_;
};

}  // namespace

void RatInstance::Validate() const {
  if (num_users < 2) throw ArgumentError("RAT game needs at least two users");
  if (capacities.empty()) throw ArgumentError("RAT game needs at least one station");
  if (kinds.size() != capacities.size()) throw ArgumentError("one kind per station");
  for (double c : capacities) {
    if (!(c > 0.0) || !std::isfinite(c)) throw ArgumentError("station capacities must be > 0");
  }
  if (!(threshold > 0.0)) throw ArgumentError("threshold must be > 0");
}

RatInstance MakeRatInstance(const RatParams& params) {
  RatInstance instance;
  instance.num_users = params.num_users;
  instance.threshold = params.threshold;
  for (int k = 0; k < params.num_wifi; ++k) {
    instance.capacities.push_back(params.wifi_capacity);
    instance.kinds.push_back(StationKind::kWifi);
  }
  for (int k = 0; k < params.num_lte; ++k) {
    instance.capacities.push_back(params.lte_capacity);
    instance.kinds.push_back(StationKind::kLte);
  }
  instance.Validate();
  return instance;
}

std::vector<double> RatThroughput(const RatInstance& instance, const JointAction& a) {
  if (a.size() != instance.num_users) throw ArgumentError("profile size mismatch");
  std::vector<int> load(instance.num_stations(), 0);
  for (ActionId b : a) {
    if (b < 0 || b >= instance.num_stations()) throw ArgumentError("unknown station");
    ++load[b];
  }
  std::vector<double> out(a.size());
  for (PlayerId u = 0; u < a.size(); ++u) out[u] = instance.capacities[a[u]] / load[a[u]];
  return out;
}

GameDefinition MakeRatGame(RatInstance instance) {
  instance.Validate();
  std::vector<int> counts(instance.num_users, instance.num_stations());
  return GameDefinition("rat_selection", std::move(counts),
                        std::make_shared<RatCorrespondence>(std::move(instance)));
}

const RatInstance* AsRatInstance(const GameDefinition& game) {
  const auto* rat = dynamic_cast<const RatCorrespondence*>(&game.correspondence());
  return rat == nullptr ? nullptr : &rat->instance();
}

}  // namespace satgame
