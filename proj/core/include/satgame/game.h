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

#ifndef SATGAME_GAME_H_
#define SATGAME_GAME_H_

// Satisfaction games described by correspondence oracles.
//
// A player i is satisfied at profile a when a_i is a member of f_i(a_{-i}).
// The correspondence is queried, never tabulated, so games with enormous
// profile spaces stay cheap. Games whose satisfaction depends on extra
// randomness (a serving order, say) receive it explicitly as an EnvSample,
// which lets counterfactual queries reuse the realized randomness.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "satgame/random.h"

namespace satgame {

using PlayerId = int;
using ActionId = int;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// One action index per player, in player order.
class JointAction {
 public:
  JointAction() = default;
  explicit JointAction(std::vector<ActionId> actions) : actions_(std::move(actions)) {}
  JointAction(std::initializer_list<ActionId> actions) : actions_(actions) {}

  int size() const { return static_cast<int>(actions_.size()); }
  ActionId operator[](PlayerId i) const { return actions_[i]; }
  ActionId& operator[](PlayerId i) { return actions_[i]; }
  std::span<const ActionId> actions() const { return actions_; }
  std::vector<ActionId>::const_iterator begin() const { return actions_.begin(); }
  std::vector<ActionId>::const_iterator end() const { return actions_.end(); }

  // "(0,1,3)"
  std::string ToString() const;

  friend bool operator==(const JointAction&, const JointAction&) = default;
  friend auto operator<=>(const JointAction&, const JointAction&) = default;

 private:
  std::vector<ActionId> actions_;
};

struct JointActionHash {
  std::size_t operator()(const JointAction& a) const;
};

// Opaque per-iteration environment randomness. Deterministic games use the
// empty sample; the resource game stores a serving permutation here.
struct EnvSample {
  std::vector<int> values;

  bool IsTrivial() const { return values.empty(); }
  friend bool operator==(const EnvSample&, const EnvSample&) = default;
};

struct SatisfactionOutcome {
  std::vector<bool> satisfied;

  int NumSatisfied() const;
  friend bool operator==(const SatisfactionOutcome&, const SatisfactionOutcome&) = default;
};

// Membership flags [a_i' in f_i(a_{-i})] for every player and every one of
// that player's actions, evaluated at a single profile and sample.
class SatisfactionTable {
 public:
  SatisfactionTable() = default;
  explicit SatisfactionTable(std::span<const int> action_counts);

  int num_players() const { return static_cast<int>(offsets_.size()) - 1; }
  int num_actions(PlayerId i) const { return offsets_[i + 1] - offsets_[i]; }
  bool Contains(PlayerId i, ActionId a) const { return flags_[offsets_[i] + a] != 0; }
  std::span<std::uint8_t> Row(PlayerId i) {
    return {flags_.data() + offsets_[i], static_cast<std::size_t>(num_actions(i))};
  }
  std::span<const std::uint8_t> Row(PlayerId i) const {
    return {flags_.data() + offsets_[i], static_cast<std::size_t>(num_actions(i))};
  }
  void Clear();

 private:
  std::vector<int> offsets_{0};
  std::vector<std::uint8_t> flags_;
};

// The oracle behind a game. Implementations must be pure: identical
// arguments always produce identical answers.
class Correspondence {
 public:
  virtual ~Correspondence() = default;

  virtual bool IsDeterministic() const { return true; }
  virtual EnvSample SampleEnv(Rng& /*rng*/) const { return {}; }

  // Writes 1 into row[b] for every b in f_player(profile_{-player}) and 0
  // elsewhere. profile[player] is ignored; row has one slot per action.
  virtual void SatisfyingActions(PlayerId player, const JointAction& profile,
                                 const EnvSample& env,
                                 std::span<std::uint8_t> row) const = 0;

  // Fills the whole table. The default loops over SatisfyingActions; games
  // with shared structure override it.
  virtual void FillTable(const JointAction& profile, const EnvSample& env,
                         SatisfactionTable& table) const;
};

// Immutable game handle: player/action counts plus the correspondence.
// Cheap to copy; safe to share across threads.
class GameDefinition {
 public:
  GameDefinition(std::string name, std::vector<int> action_counts,
                 std::shared_ptr<const Correspondence> correspondence);

  const std::string& name() const { return name_; }
  int num_players() const { return static_cast<int>(action_counts_.size()); }
  int num_actions(PlayerId i) const { return action_counts_[i]; }
  std::span<const int> action_counts() const { return action_counts_; }
  int max_actions() const { return max_actions_; }
  bool is_deterministic() const { return correspondence_->IsDeterministic(); }
  const Correspondence& correspondence() const { return *correspondence_; }

  EnvSample SampleEnv(Rng& rng) const { return correspondence_->SampleEnv(rng); }
  SatisfactionTable MakeTable() const { return SatisfactionTable(action_counts_); }

  // Unchecked hot path.
  void FillTable(const JointAction& profile, const EnvSample& env,
                 SatisfactionTable& table) const {
    correspondence_->FillTable(profile, env, table);
  }

  void ValidatePlayer(PlayerId i) const;
  void ValidateAction(PlayerId i, ActionId a) const;
  void ValidateProfile(const JointAction& profile) const;

 private:
  std::string name_;
  std::vector<int> action_counts_;
  int max_actions_ = 0;
  std::shared_ptr<const Correspondence> correspondence_;
};

// Predicate form of a correspondence: is `action` in f_player(profile_{-player})?
using MembershipFn =
    std::function<bool(PlayerId player, ActionId action, const JointAction& profile)>;

// Wraps a membership predicate as a deterministic game.
GameDefinition MakeGame(std::string name, std::vector<int> action_counts,
                        MembershipFn membership);

// f_i(a_{-i}) under `env`; `opponents` lists the other N-1 actions in player
// order. May be empty.
std::vector<ActionId> SatisfyingSet(const GameDefinition& game, PlayerId i,
                                    std::span<const ActionId> opponents,
                                    const EnvSample& env = {});

// 1 if a_i is in f_i(a_{-i}), else 0.
int NaturalUtility(const GameDefinition& game, PlayerId i, const JointAction& a,
                   const EnvSample& env = {});

SatisfactionOutcome SatisfiedPartition(const GameDefinition& game, const JointAction& a,
                                       const EnvSample& env = {});

// Actions of player i that satisfy it against every opponent profile, found by
// exhaustive enumeration. Deterministic games only.
std::vector<ActionId> FindClippingActions(const GameDefinition& game, PlayerId i,
                                          std::uint64_t cap = kDefaultEnumerationCap);

// Profile enumeration helpers.
std::uint64_t CountProfiles(std::span<const int> action_counts, std::uint64_t cap);

template <typename Fn>
void ForEachProfile(std::span<const int> action_counts, Fn&& fn) {
  std::vector<ActionId> digits(action_counts.size(), 0);
  for (int c : action_counts) {
    if (c <= 0) return;
  }
  while (true) {
    fn(JointAction(digits));
    std::size_t k = digits.size();
    while (k > 0) {
      --k;
      if (++digits[k] < action_counts[k]) break;
      digits[k] = 0;
      if (k == 0) return;
    }
    if (digits.empty()) return;
  }
}

// Builds the full profile from opponents' actions plus a_i in slot i.
JointAction InsertAction(std::span<const ActionId> opponents, PlayerId i, ActionId a_i);
std::vector<ActionId> OpponentActions(const JointAction& a, PlayerId i);

}  // namespace satgame

#endif  // SATGAME_GAME_H_
