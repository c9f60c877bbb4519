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

#include "satgame/game.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "satgame/errors.h"

namespace satgame {

std::string JointAction::ToString() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < actions_.size(); ++k) {
    if (k > 0) out << ',';
    out << actions_[k];
  }
  out << ')';
  return out.str();
}

std::size_t JointActionHash::operator()(const JointAction& a) const {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (ActionId x : a) h = MixBits(h ^ static_cast<std::uint64_t>(x));
  return static_cast<std::size_t>(h);
}

int SatisfactionOutcome::NumSatisfied() const {
  return static_cast<int>(std::count(satisfied.begin(), satisfied.end(), true));
}

SatisfactionTable::SatisfactionTable(std::span<const int> action_counts) {
  offsets_.reserve(action_counts.size() + 1);
  for (int c : action_counts) offsets_.push_back(offsets_.back() + c);
  flags_.assign(offsets_.back(), 0);
}

void SatisfactionTable::Clear() { std::fill(flags_.begin(), flags_.end(), 0); }

void Correspondence::FillTable(const JointAction& profile, const EnvSample& env,
                               SatisfactionTable& table) const {
  for (PlayerId i = 0; i < table.num_players(); ++i) {
    SatisfyingActions(i, profile, env, table.Row(i));
  }
}

GameDefinition::GameDefinition(std::string name, std::vector<int> action_counts,
                               std::shared_ptr<const Correspondence> correspondence)
    : name_(std::move(name)),
      action_counts_(std::move(action_counts)),
      correspondence_(std::move(correspondence)) {
  if (action_counts_.size() < 2) {
    throw ArgumentError("a satisfaction game needs at least two players");
  }
  for (int c : action_counts_) {
    if (c < 1) throw ArgumentError("every player needs a non-empty action set");
  }
  if (correspondence_ == nullptr) throw ArgumentError("missing correspondence");
  max_actions_ = *std::max_element(action_counts_.begin(), action_counts_.end());
}

void GameDefinition::ValidatePlayer(PlayerId i) const {
  if (i < 0 || i >= num_players()) {
    throw ArgumentError("player " + std::to_string(i) + " out of range [0, " +
                        std::to_string(num_players()) + ")");
  }
}

void GameDefinition::ValidateAction(PlayerId i, ActionId a) const {
  ValidatePlayer(i);
  if (a < 0 || a >= action_counts_[i]) {
    throw ArgumentError("action " + std::to_string(a) + " invalid for player " +
                        std::to_string(i));
  }
}

void GameDefinition::ValidateProfile(const JointAction& profile) const {
  if (profile.size() != num_players()) {
    throw ArgumentError("profile " + profile.ToString() + " has " +
                        std::to_string(profile.size()) + " entries, expected " +
                        std::to_string(num_players()));
  }
  for (PlayerId i = 0; i < num_players(); ++i) ValidateAction(i, profile[i]);
}

namespace {

class PredicateCorrespondence final : public Correspondence {
 public:
  explicit PredicateCorrespondence(MembershipFn membership)
      : membership_(std::move(membership)) {}

  void SatisfyingActions(PlayerId player, const JointAction& profile, const EnvSample&,
                         std::span<std::uint8_t> row) const override {
    for (ActionId b = 0; b < static_cast<ActionId>(row.size()); ++b) {
      row[b] = membership_(player, b, profile) ? 1 : 0;
    }
  }

 private:
  MembershipFn membership_;
};

}  // namespace

GameDefinition MakeGame(std::string name, std::vector<int> action_counts,
                        MembershipFn membership) {
  return GameDefinition(std::move(name), std::move(action_counts),
                        std::make_shared<PredicateCorrespondence>(std::move(membership)));
}

JointAction InsertAction(std::span<const ActionId> opponents, PlayerId i, ActionId a_i) {
  std::vector<ActionId> full;
  full.reserve(opponents.size() + 1);
  full.insert(full.end(), opponents.begin(), opponents.begin() + i);
  full.push_back(a_i);
  full.insert(full.end(), opponents.begin() + i, opponents.end());
  return JointAction(std::move(full));
}

std::vector<ActionId> OpponentActions(const JointAction& a, PlayerId i) {
  std::vector<ActionId> out;
  out.reserve(a.size() - 1);
  for (PlayerId j = 0; j < a.size(); ++j) {
    if (j != i) out.push_back(a[j]);
  }
  return out;
}

std::vector<ActionId> SatisfyingSet(const GameDefinition& game, PlayerId i,
                                    std::span<const ActionId> opponents,
                                    const EnvSample& env) {
  game.ValidatePlayer(i);
  if (static_cast<int>(opponents.size()) != game.num_players() - 1) {
    throw ArgumentError("expected " + std::to_string(game.num_players() - 1) +
                        " opponent actions");
  }
  JointAction profile = InsertAction(opponents, i, 0);
  game.ValidateProfile(profile);
  std::vector<std::uint8_t> row(game.num_actions(i));
  game.correspondence().SatisfyingActions(i, profile, env, row);
  std::vector<ActionId> out;
  for (ActionId b = 0; b < game.num_actions(i); ++b) {
    if (row[b]) out.push_back(b);
  }
  return out;
}

int NaturalUtility(const GameDefinition& game, PlayerId i, const JointAction& a,
                   const EnvSample& env) {
  game.ValidateProfile(a);
  game.ValidatePlayer(i);
  std::vector<std::uint8_t> row(game.num_actions(i));
  game.correspondence().SatisfyingActions(i, a, env, row);
  return row[a[i]] ? 1 : 0;
}

SatisfactionOutcome SatisfiedPartition(const GameDefinition& game, const JointAction& a,
                                       const EnvSample& env) {
  game.ValidateProfile(a);
  SatisfactionTable table = game.MakeTable();
  game.FillTable(a, env, table);
  SatisfactionOutcome out;
  out.satisfied.resize(game.num_players());
  for (PlayerId i = 0; i < game.num_players(); ++i) out.satisfied[i] = table.Contains(i, a[i]);
  return out;
}

std::uint64_t CountProfiles(std::span<const int> action_counts, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int c : action_counts) {
    if (c <= 0) return 0;
    if (total > cap / static_cast<std::uint64_t>(c)) {
      throw SizeError("profile space exceeds enumeration cap of " + std::to_string(cap));
    }
    total *= static_cast<std::uint64_t>(c);
  }
  if (total > cap) {
    throw SizeError("profile space exceeds enumeration cap of " + std::to_string(cap));
  }
  return total;
}

std::vector<ActionId> FindClippingActions(const GameDefinition& game, PlayerId i,
                                          std::uint64_t cap) {
  game.ValidatePlayer(i);
  if (!game.is_deterministic()) {
    throw UnsupportedGameError("clipping actions require a deterministic game");
  }
  std::vector<int> opponent_counts;
  for (PlayerId j = 0; j < game.num_players(); ++j) {
    if (j != i) opponent_counts.push_back(game.num_actions(j));
  }
  CountProfiles(opponent_counts, cap);

  std::vector<std::uint8_t> always(game.num_actions(i), 1);
  std::vector<std::uint8_t> row(game.num_actions(i));
  const EnvSample trivial;
  ForEachProfile(opponent_counts, [&](const JointAction& opp) {
    JointAction profile = InsertAction(opp.actions(), i, 0);
    game.correspondence().SatisfyingActions(i, profile, trivial, row);
    for (std::size_t b = 0; b < row.size(); ++b) always[b] &= row[b];
  });
  std::vector<ActionId> out;
  for (ActionId b = 0; b < game.num_actions(i); ++b) {
    if (always[b]) out.push_back(b);
  }
  return out;
}

}  // namespace satgame
