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

#include "satgame/games/table_game.h"

#include <utility>

#include "satgame/errors.h"

namespace satgame {
namespace {

class TableCorrespondence final : public Correspondence {
 public:
  TableCorrespondence(std::vector<int> action_counts, CorrespondenceTables flags)
      : action_counts_(std::move(action_counts)), flags_(std::move(flags)) {}

  void SatisfyingActions(PlayerId player, const JointAction& profile, const EnvSample&,
                         std::span<std::uint8_t> row) const override {
    const std::uint64_t k = OpponentIndex(action_counts_, profile, player);
    const std::size_t m = static_cast<std::size_t>(action_counts_[player]);
    const auto& table = flags_[player];
    for (std::size_t b = 0; b < m; ++b) row[b] = table[k * m + b];
  }

 private:
  std::vector<int> action_counts_;
  CorrespondenceTables flags_;
};

}  // namespace

std::uint64_t OpponentIndex(std::span<const int> action_counts, const JointAction& profile,
                            PlayerId i) {
  std::uint64_t k = 0;
  for (PlayerId j = 0; j < static_cast<PlayerId>(action_counts.size()); ++j) {
    if (j == i) continue;
    k = k * static_cast<std::uint64_t>(action_counts[j]) + static_cast<std::uint64_t>(profile[j]);
  }
  return k;
}

GameDefinition MakeTableGame(std::string name, std::vector<int> action_counts,
                             CorrespondenceTables flags) {
  if (flags.size() != action_counts.size()) {
    throw ArgumentError("need one correspondence table per player");
  }
  for (PlayerId i = 0; i < static_cast<PlayerId>(action_counts.size()); ++i) {
    std::uint64_t rows = 1;
    for (PlayerId j = 0; j < static_cast<PlayerId>(action_counts.size()); ++j) {
      if (j != i) rows *= static_cast<std::uint64_t>(action_counts[j]);
    }
    if (flags[i].size() != rows * static_cast<std::uint64_t>(action_counts[i])) {
      throw ArgumentError("correspondence table for player " + std::to_string(i) +
                          " has the wrong size");
    }
  }
  auto correspondence = std::make_shared<TableCorrespondence>(action_counts, std::move(flags));
  return GameDefinition(std::move(name), std::move(action_counts), std::move(correspondence));
}

GameDefinition RandomTableGame(std::vector<int> action_counts, double density, Rng& rng) {
  CorrespondenceTables flags(action_counts.size());
  for (std::size_t i = 0; i < action_counts.size(); ++i) {
    std::uint64_t size = static_cast<std::uint64_t>(action_counts[i]);
    for (std::size_t j = 0; j < action_counts.size(); ++j) {
      if (j != i) size *= static_cast<std::uint64_t>(action_counts[j]);
    }
    flags[i].resize(size);
    for (auto& f : flags[i]) f = UniformUnit(rng) < density ? 1 : 0;
  }
  return MakeTableGame("random", std::move(action_counts), std::move(flags));
}

CorrespondenceTables Tabulate(const GameDefinition& game, std::uint64_t cap) {
  if (!game.is_deterministic()) throw UnsupportedGameError("only deterministic games tabulate");
  CountProfiles(game.action_counts(), cap);
  const int n = game.num_players();
  CorrespondenceTables flags(n);
  const EnvSample trivial;
  for (PlayerId i = 0; i < n; ++i) {
    std::vector<int> others;
    for (PlayerId j = 0; j < n; ++j) {
      if (j != i) others.push_back(game.num_actions(j));
    }
    const std::size_t m = static_cast<std::size_t>(game.num_actions(i));
    std::vector<std::uint8_t> row(m);
    ForEachProfile(others, [&](const JointAction& opp) {
      game.correspondence().SatisfyingActions(i, InsertAction(opp.actions(), i, 0), trivial, row);
      flags[i].insert(flags[i].end(), row.begin(), row.end());
    });
  }
  return flags;
}

}  // namespace satgame
