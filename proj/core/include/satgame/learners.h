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

#ifndef SATGAME_LEARNERS_H_
#define SATGAME_LEARNERS_H_

// Repeated-play learning rules over satisfaction games.
//
// Each rule is available two ways. The free functions (PselStep, RmStep, ...)
// take an explicit history or regret state and return the next mixed action;
// they are the reference definitions. Learner objects implement the same
// rules incrementally with O(sum_i |A_i|) work per iteration and are what
// the experiment harness drives.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "satgame/equilibrium.h"
#include "satgame/game.h"
#include "satgame/random.h"

namespace satgame {

enum class Algorithm { kPselUniform, kPselReinforced, kSra, kRm, kRmrl };

enum class PselMode { kUniform, kReinforced };

struct LearnerConfig {
  Algorithm algorithm = Algorithm::kRm;
  // Inertia constant; 0 selects 2 * max_i |A_i|.
  double mu = 0.0;
  // Maximum number of unsatisfied players that move per SRA iteration.
  int sra_max_movers = 1;
  // Tremble level delta_0 mixed in while t <= cutoff.
  double tremble = 0.05;
  // Tremble cutoff T0; negative selects floor(0.6 * T).
  int tremble_cutoff = -1;
  std::uint64_t seed = 0;

  double ResolvedMu(const GameDefinition& game) const;
  int ResolvedTrembleCutoff(int total_iterations) const;
  // Throws ConfigError.
  void Validate(const GameDefinition& game) const;
  // psel_uniform, psel_reinforced, sra_<k>, rm, rmrl
  std::string Label() const;
};

// Parses a label produced by LearnerConfig::Label (plus "sra" for k = 1).
LearnerConfig ParseAlgorithm(std::string_view label);

// Next-iteration pmf over each player's own actions.
struct MixedAction {
  std::vector<std::vector<double>> probs;

  static MixedAction Uniform(const GameDefinition& game);
  static MixedAction PointMass(const GameDefinition& game, const JointAction& a);
  JointAction Sample(Rng& rng) const;
  void SampleInto(Rng& rng, JointAction& out) const;
};

struct IterationRecord {
  JointAction actions;
  EnvSample env;
  SatisfactionOutcome outcome;
};

// Evaluates satisfaction of `actions` under `env`.
IterationRecord MakeRecord(const GameDefinition& game, JointAction actions, EnvSample env);

class PlayHistory {
 public:
  void Append(IterationRecord record);
  // Stores the pmf each player drew from at this iteration as well.
  void Append(IterationRecord record, MixedAction play_probabilities);

  int t() const { return static_cast<int>(records_.size()); }
  bool empty() const { return records_.empty(); }
  const IterationRecord& at(int n) const { return records_.at(n); }
  const IterationRecord& back() const { return records_.back(); }
  const std::vector<IterationRecord>& records() const { return records_; }
  // Empty unless every append supplied play probabilities.
  const std::vector<MixedAction>& play_probabilities() const { return play_probabilities_; }

 private:
  std::vector<IterationRecord> records_;
  std::vector<MixedAction> play_probabilities_;
};

// Cumulative regret numerators. Regret(i, a, b) = sum / t reproduces the
// running averages of either regret estimator.
class RegretState {
 public:
  RegretState() = default;
  explicit RegretState(std::span<const int> action_counts);

  int t() const { return t_; }
  int num_players() const { return static_cast<int>(action_counts_.size()); }
  int num_actions(PlayerId i) const { return action_counts_[i]; }

  double CumulativeRegret(PlayerId i, ActionId a, ActionId b) const {
    return sums_[offsets_[i] + static_cast<std::size_t>(a) * action_counts_[i] + b];
  }
  double Regret(PlayerId i, ActionId a, ActionId b) const {
    return t_ == 0 ? 0.0 : CumulativeRegret(i, a, b) / t_;
  }
  std::int64_t PlayCount(PlayerId i, ActionId a) const { return play_counts_[count_offsets_[i] + a]; }

  // Full-information update: each player learns whether every alternative
  // action would have satisfied it against the realized opponents.
  void ObserveFullInformation(const JointAction& played, const SatisfactionTable& table);

  // Bandit update from realized satisfaction and the pmfs that were sampled.
  // Throws DegenerateProbabilityError if a played action had probability 0.
  void ObserveBandit(const JointAction& played, const SatisfactionOutcome& outcome,
                     const MixedAction& play_probabilities);

  double MaxPositiveRegret() const;

 private:
  void Count(const JointAction& played);

  std::vector<int> action_counts_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> count_offsets_;
  std::vector<double> sums_;
  std::vector<std::int64_t> play_counts_;
  int t_ = 0;
};

// Satisfied players repeat; unsatisfied players explore. t >= 1.
MixedAction PselStep(const GameDefinition& game, const PlayHistory& history, PselMode mode);

// Up to k unsatisfied players jump uniformly into their current satisfying
// set (evaluated under the last sample); everyone else repeats.
MixedAction SraStep(const GameDefinition& game, const PlayHistory& history, int k, Rng& rng);

// Regrets recomputed from the whole history, reusing each stored sample.
RegretState RmUpdateRegrets(const GameDefinition& game, const PlayHistory& history);

// P(b) = min([R(last, b)]_+, 1) / mu for b != last; the rest stays on last.
MixedAction RmStep(const RegretState& regrets, const JointAction& last_action, double mu);

// Importance-weighted regret estimates from realized satisfaction only.
// play_probabilities[n] is the pmf sampled at iteration n.
RegretState RmrlUpdateRegrets(const GameDefinition& game, const PlayHistory& history,
                              std::span<const MixedAction> play_probabilities);

// (1 - tremble) * RmStep + tremble * uniform. tremble in [0, 1).
MixedAction RmrlStep(const RegretState& regrets, const JointAction& last_action, double mu,
                     double tremble);

// Frequencies of the profiles played in iterations [from, to).
JointPmf EmpiricalDistribution(const PlayHistory& history);
JointPmf EmpiricalDistribution(const PlayHistory& history, int from, int to);

struct ConvergenceStatus {
  bool converged = false;        // last W profiles identical
  bool insufficient_history = false;
  JointAction profile;           // the repeated profile when converged
  int stable_since = -1;         // first iteration of the final constant run
};

ConvergenceStatus DetectConvergence(const PlayHistory& history, int window = 100);

// Incremental state machine for one algorithm.
class Learner {
 public:
  virtual ~Learner() = default;

  // Pmf for the next iteration. Before the first observation every player
  // is uniform.
  virtual void NextMixedAction(Rng& rng, MixedAction& out) = 0;

  // Feeds back the iteration just played. `table` is the full satisfaction
  // table at `played` under the realized sample; `played_from` is the pmf
  // that produced `played`.
  virtual void Observe(const JointAction& played, const SatisfactionTable& table,
                       const MixedAction& played_from) = 0;

  // Only for regret-based learners.
  virtual const RegretState* regrets() const { return nullptr; }

  int t() const { return t_; }

 protected:
  int t_ = 0;
};

std::unique_ptr<Learner> MakeLearner(const GameDefinition& game, const LearnerConfig& config,
                                     int total_iterations);

}  // namespace satgame

#endif  // SATGAME_LEARNERS_H_
