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

#include "satgame/learners.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <cmath>
#include <numeric>
#include <utility>

#include "satgame/errors.h"

namespace satgame {
namespace {

// Switching mass toward each alternative; binary utilities bound true
// regrets by 1, so estimates are clipped there.
void RegretMatchingRow(const RegretState& regrets, PlayerId i, ActionId last, double mu,
                       double tremble, std::vector<double>& row) {
  const int m = regrets.num_actions(i);
  row.assign(m, 0.0);
  double moved = 0.0;
  for (ActionId b = 0; b < m; ++b) {
    if (b == last) continue;
    const double r = std::min(std::max(regrets.Regret(i, last, b), 0.0), 1.0);
    row[b] = r / mu;
    moved += row[b];
  }
  row[last] = 1.0 - moved;
  if (tremble > 0.0) {
    const double share = tremble / m;
    for (double& p : row) p = (1.0 - tremble) * p + share;
  }
}

void CheckMu(const RegretState& regrets, double mu) {
  for (PlayerId i = 0; i < regrets.num_players(); ++i) {
    if (!(mu > regrets.num_actions(i) - 1)) {
      throw ConfigError("mu = " + std::to_string(mu) + " must exceed |A_i| - 1 = " +
                        std::to_string(regrets.num_actions(i) - 1));
    }
  }
}

void PselRow(bool satisfied, ActionId last, PselMode mode,
             std::span<const std::int64_t> failures, std::vector<double>& row) {
  const int m = static_cast<int>(row.size());
  std::fill(row.begin(), row.end(), 0.0);
  if (satisfied) {
    row[last] = 1.0;
    return;
  }
  if (mode == PselMode::kUniform) {
    std::fill(row.begin(), row.end(), 1.0 / m);
    return;
  }
  double total = 0.0;
  for (int b = 0; b < m; ++b) {
    row[b] = 1.0 / (1.0 + static_cast<double>(failures[b]));
    total += row[b];
  }
  for (double& p : row) p /= total;
}

void SraMoves(const SatisfactionTable& table, const JointAction& last,
              const SatisfactionOutcome& outcome, int k, Rng& rng, MixedAction& out) {
  std::vector<PlayerId> unsatisfied;
  for (PlayerId i = 0; i < last.size(); ++i) {
    auto& row = out.probs[i];
    std::fill(row.begin(), row.end(), 0.0);
    row[last[i]] = 1.0;
    if (!outcome.satisfied[i]) unsatisfied.push_back(i);
  }
  const int movers = std::min<int>(k, static_cast<int>(unsatisfied.size()));
  for (int s = 0; s < movers; ++s) {
    const int pick = s + UniformIndex(rng, static_cast<int>(unsatisfied.size()) - s);
    std::swap(unsatisfied[s], unsatisfied[pick]);
    const PlayerId i = unsatisfied[s];
    auto satisfying = table.Row(i);
    const int count = static_cast<int>(std::count(satisfying.begin(), satisfying.end(), 1));
    if (count == 0) continue;
    auto& row = out.probs[i];
    for (std::size_t b = 0; b < row.size(); ++b) row[b] = satisfying[b] ? 1.0 / count : 0.0;
  }
}

void ResizeLike(const GameDefinition& game, MixedAction& out) {
  out.probs.resize(game.num_players());
  for (PlayerId i = 0; i < game.num_players(); ++i) out.probs[i].resize(game.num_actions(i));
}

void FillUniform(MixedAction& out) {
  for (auto& row : out.probs) std::fill(row.begin(), row.end(), 1.0 / row.size());
}

}  // namespace

double LearnerConfig::ResolvedMu(const GameDefinition& game) const {
  return mu > 0.0 ? mu : 2.0 * game.max_actions();
}

int LearnerConfig::ResolvedTrembleCutoff(int total_iterations) const {
  return tremble_cutoff >= 0 ? tremble_cutoff
                             : static_cast<int>(std::floor(0.6 * total_iterations));
}

void LearnerConfig::Validate(const GameDefinition& game) const {
  const double resolved = ResolvedMu(game);
  if (!(resolved > game.max_actions() - 1)) {
    throw ConfigError("mu = " + std::to_string(resolved) + " must exceed max |A_i| - 1 = " +
                      std::to_string(game.max_actions() - 1));
  }
  if (!(tremble >= 0.0 && tremble < 1.0)) throw ConfigError("tremble must lie in [0, 1)");
  if (sra_max_movers < 1) throw ConfigError("sra_max_movers must be at least 1");
}

std::string LearnerConfig::Label() const {
  switch (algorithm) {
    case Algorithm::kPselUniform: return "psel_uniform";
    case Algorithm::kPselReinforced: return "psel_reinforced";
    case Algorithm::kSra: return "sra_" + std::to_string(sra_max_movers);
    case Algorithm::kRm: return "rm";
    case Algorithm::kRmrl: return "rmrl";
  }
  return "unknown";
}

LearnerConfig ParseAlgorithm(std::string_view label) {
  LearnerConfig config;
  if (label == "psel_uniform" || label == "psel") {
    config.algorithm = Algorithm::kPselUniform;
  } else if (label == "psel_reinforced") {
    config.algorithm = Algorithm::kPselReinforced;
  } else if (label == "rm") {
    config.algorithm = Algorithm::kRm;
  } else if (label == "rmrl") {
    config.algorithm = Algorithm::kRmrl;
  } else if (label == "sra") {
    config.algorithm = Algorithm::kSra;
  } else if (label.starts_with("sra_")) {
    config.algorithm = Algorithm::kSra;
    std::string_view digits = label.substr(4);
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 1) {
      throw ConfigError("bad SRA label '" + std::string(label) + "'");
    }
    config.sra_max_movers = k;
  } else {
    throw ConfigError("unknown algorithm '" + std::string(label) +
                      "' (expected psel_uniform, psel_reinforced, sra_<k>, rm, rmrl)");
  }
  return config;
}

MixedAction MixedAction::Uniform(const GameDefinition& game) {
  MixedAction out;
  ResizeLike(game, out);
  FillUniform(out);
  return out;
}

MixedAction MixedAction::PointMass(const GameDefinition& game, const JointAction& a) {
  game.ValidateProfile(a);
  MixedAction out;
  ResizeLike(game, out);
  for (PlayerId i = 0; i < game.num_players(); ++i) out.probs[i][a[i]] = 1.0;
  return out;
}

JointAction MixedAction::Sample(Rng& rng) const {
  JointAction out(std::vector<ActionId>(probs.size(), 0));
  SampleInto(rng, out);
  return out;
}

void MixedAction::SampleInto(Rng& rng, JointAction& out) const {
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const auto& row = probs[i];
    const double u = UniformUnit(rng);
    double acc = 0.0;
    ActionId pick = -1;
    ActionId last_positive = 0;
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (row[b] <= 0.0) continue;
      last_positive = static_cast<ActionId>(b);
      acc += row[b];
      if (u < acc) {
        pick = static_cast<ActionId>(b);
        break;
      }
    }
    // Rounding can leave acc slightly below 1.
    out[static_cast<PlayerId>(i)] = pick >= 0 ? pick : last_positive;
  }
}

IterationRecord MakeRecord(const GameDefinition& game, JointAction actions, EnvSample env) {
  IterationRecord record;
  record.outcome = SatisfiedPartition(game, actions, env);
  record.actions = std::move(actions);
  record.env = std::move(env);
  return record;
}

void PlayHistory::Append(IterationRecord record) {
  if (!play_probabilities_.empty()) {
    throw ArgumentError("history records play probabilities; supply them on every append");
  }
  records_.push_back(std::move(record));
}

void PlayHistory::Append(IterationRecord record, MixedAction play_probabilities) {
  if (play_probabilities_.size() != records_.size()) {
    throw ArgumentError("history started without play probabilities");
  }
  records_.push_back(std::move(record));
  play_probabilities_.push_back(std::move(play_probabilities));
}

RegretState::RegretState(std::span<const int> action_counts)
    : action_counts_(action_counts.begin(), action_counts.end()) {
  std::size_t total = 0;
  std::size_t counts = 0;
  for (int m : action_counts_) {
    offsets_.push_back(total);
    count_offsets_.push_back(counts);
    total += static_cast<std::size_t>(m) * m;
    counts += m;
  }
  sums_.assign(total, 0.0);
  play_counts_.assign(counts, 0);
}

void RegretState::Count(const JointAction& played) {
  for (PlayerId i = 0; i < num_players(); ++i) ++play_counts_[count_offsets_[i] + played[i]];
  ++t_;
}

void RegretState::ObserveFullInformation(const JointAction& played,
                                         const SatisfactionTable& table) {
  for (PlayerId i = 0; i < num_players(); ++i) {
    const int m = action_counts_[i];
    const ActionId a = played[i];
    const int stay = table.Contains(i, a) ? 1 : 0;
    double* row = sums_.data() + offsets_[i] + static_cast<std::size_t>(a) * m;
    auto flags = table.Row(i);
    for (ActionId b = 0; b < m; ++b) {
      if (b != a) row[b] += static_cast<double>(static_cast<int>(flags[b]) - stay);
    }
  }
  Count(played);
}

void RegretState::ObserveBandit(const JointAction& played, const SatisfactionOutcome& outcome,
                                const MixedAction& play_probabilities) {
  for (PlayerId i = 0; i < num_players(); ++i) {
    if (!outcome.satisfied[i]) continue;
    const int m = action_counts_[i];
    const ActionId b = played[i];
    const auto& probs = play_probabilities.probs[i];
    if (!(probs[b] > 0.0)) {
      throw DegenerateProbabilityError("player " + std::to_string(i) + " played action " +
                                       std::to_string(b) + " with recorded probability 0");
    }
    double* base = sums_.data() + offsets_[i];
    // Column b gains u * p(a) / p(b); row b loses u.
    for (ActionId a = 0; a < m; ++a) {
      if (a == b) continue;
      base[static_cast<std::size_t>(a) * m + b] += probs[a] / probs[b];
      base[static_cast<std::size_t>(b) * m + a] -= 1.0;
    }
  }
  Count(played);
}

double RegretState::MaxPositiveRegret() const {
  double best = 0.0;
  for (PlayerId i = 0; i < num_players(); ++i) {
    const int m = action_counts_[i];
    for (ActionId a = 0; a < m; ++a) {
      for (ActionId b = 0; b < m; ++b) {
        if (a != b) best = std::max(best, Regret(i, a, b));
      }
    }
  }
  return best;
}

namespace {

void RequireHistory(const PlayHistory& history) {
  if (history.empty()) throw ArgumentError("learning step needs t >= 1");
}

}  // namespace

MixedAction PselStep(const GameDefinition& game, const PlayHistory& history, PselMode mode) {
  RequireHistory(history);
  const int n = game.num_players();
  std::vector<std::vector<std::int64_t>> failures(n);
  for (PlayerId i = 0; i < n; ++i) failures[i].assign(game.num_actions(i), 0);
  if (mode == PselMode::kReinforced) {
    for (const auto& record : history.records()) {
      for (PlayerId i = 0; i < n; ++i) {
        if (!record.outcome.satisfied[i]) ++failures[i][record.actions[i]];
      }
    }
  }
  const IterationRecord& last = history.back();
  MixedAction out;
  ResizeLike(game, out);
  for (PlayerId i = 0; i < n; ++i) {
    PselRow(last.outcome.satisfied[i], last.actions[i], mode, failures[i], out.probs[i]);
  }
  return out;
}

MixedAction SraStep(const GameDefinition& game, const PlayHistory& history, int k, Rng& rng) {
  RequireHistory(history);
  if (k < 1) throw ConfigError("sra_max_movers must be at least 1");
  const IterationRecord& last = history.back();
  SatisfactionTable table = game.MakeTable();
  game.FillTable(last.actions, last.env, table);
  MixedAction out;
  ResizeLike(game, out);
  SraMoves(table, last.actions, last.outcome, k, rng, out);
  return out;
}

RegretState RmUpdateRegrets(const GameDefinition& game, const PlayHistory& history) {
  RegretState state(game.action_counts());
  SatisfactionTable table = game.MakeTable();
  for (const auto& record : history.records()) {
    game.FillTable(record.actions, record.env, table);
    state.ObserveFullInformation(record.actions, table);
  }
  return state;
}

MixedAction RmStep(const RegretState& regrets, const JointAction& last_action, double mu) {
  return RmrlStep(regrets, last_action, mu, 0.0);
}

RegretState RmrlUpdateRegrets(const GameDefinition& game, const PlayHistory& history,
                              std::span<const MixedAction> play_probabilities) {
  if (static_cast<int>(play_probabilities.size()) != history.t()) {
    throw ArgumentError("need one play-probability record per iteration");
  }
  RegretState state(game.action_counts());
  for (int n = 0; n < history.t(); ++n) {
    const auto& record = history.at(n);
    state.ObserveBandit(record.actions, record.outcome, play_probabilities[n]);
  }
  return state;
}

MixedAction RmrlStep(const RegretState& regrets, const JointAction& last_action, double mu,
                     double tremble) {
  if (!(tremble >= 0.0 && tremble < 1.0)) throw ConfigError("tremble must lie in [0, 1)");
  if (last_action.size() != regrets.num_players()) {
    throw ArgumentError("last action does not match the regret state");
  }
  CheckMu(regrets, mu);
  MixedAction out;
  out.probs.resize(regrets.num_players());
  for (PlayerId i = 0; i < regrets.num_players(); ++i) {
    RegretMatchingRow(regrets, i, last_action[i], mu, tremble, out.probs[i]);
  }
  return out;
}

JointPmf EmpiricalDistribution(const PlayHistory& history) {
  return EmpiricalDistribution(history, 0, history.t());
}

JointPmf EmpiricalDistribution(const PlayHistory& history, int from, int to) {
  if (from < 0 || to > history.t() || from >= to) {
    throw ArgumentError("empirical distribution needs a non-empty iteration range");
  }
  std::map<JointAction, std::int64_t> counts;
  for (int n = from; n < to; ++n) ++counts[history.at(n).actions];
  JointPmf::Support support;
  const double total = static_cast<double>(to - from);
  for (const auto& [a, c] : counts) support.emplace(a, static_cast<double>(c) / total);
  return JointPmf(std::move(support));
}

ConvergenceStatus DetectConvergence(const PlayHistory& history, int window) {
  if (window < 2) throw ArgumentError("convergence window must be at least 2");
  ConvergenceStatus status;
  if (history.t() < window) {
    status.insufficient_history = true;
    return status;
  }
  const JointAction& last = history.back().actions;
  int start = history.t() - 1;
  while (start > 0 && history.at(start - 1).actions == last) --start;
  if (history.t() - start >= window) {
    status.converged = true;
    status.profile = last;
    status.stable_since = start;
  }
  return status;
}

namespace {

class PselLearner final : public Learner {
 public:
  PselLearner(const GameDefinition& game, PselMode mode) : mode_(mode) {
    failures_.resize(game.num_players());
    for (PlayerId i = 0; i < game.num_players(); ++i) failures_[i].assign(game.num_actions(i), 0);
  }

  void NextMixedAction(Rng&, MixedAction& out) override {
    out.probs.resize(failures_.size());
    for (std::size_t i = 0; i < failures_.size(); ++i) {
      out.probs[i].resize(failures_[i].size());
      if (t_ == 0) {
        std::fill(out.probs[i].begin(), out.probs[i].end(), 1.0 / failures_[i].size());
      } else {
        PselRow(satisfied_[i] != 0, last_[static_cast<PlayerId>(i)], mode_, failures_[i],
                out.probs[i]);
      }
    }
  }

  void Observe(const JointAction& played, const SatisfactionTable& table,
               const MixedAction&) override {
    last_ = played;
    satisfied_.resize(played.size());
    for (PlayerId i = 0; i < played.size(); ++i) {
      satisfied_[i] = table.Contains(i, played[i]);
      if (!satisfied_[i]) ++failures_[i][played[i]];
    }
    ++t_;
  }

 private:
  PselMode mode_;
  JointAction last_;
  std::vector<std::uint8_t> satisfied_;
  std::vector<std::vector<std::int64_t>> failures_;
};

class SraLearner final : public Learner {
 public:
  SraLearner(const GameDefinition& game, int movers)
      : game_(game), movers_(movers), table_(game.MakeTable()) {}

  void NextMixedAction(Rng& rng, MixedAction& out) override {
    ResizeLike(game_, out);
    if (t_ == 0) {
      FillUniform(out);
      return;
    }
    SraMoves(table_, last_, outcome_, movers_, rng, out);
  }

  void Observe(const JointAction& played, const SatisfactionTable& table,
               const MixedAction&) override {
    last_ = played;
    table_ = table;
    outcome_.satisfied.resize(played.size());
    for (PlayerId i = 0; i < played.size(); ++i) outcome_.satisfied[i] = table.Contains(i, played[i]);
    ++t_;
  }

 private:
  GameDefinition game_;
  int movers_;
  SatisfactionTable table_;
  JointAction last_;
  SatisfactionOutcome outcome_;
};

class RegretLearner final : public Learner {
 public:
  RegretLearner(const GameDefinition& game, bool bandit, double mu, double tremble, int cutoff)
      : game_(game),
        bandit_(bandit),
        mu_(mu),
        tremble_(tremble),
        cutoff_(cutoff),
        regrets_(game.action_counts()) {}

  void NextMixedAction(Rng&, MixedAction& out) override {
    ResizeLike(game_, out);
    if (t_ == 0) {
      FillUniform(out);
      return;
    }
    const double tremble = bandit_ && t_ <= cutoff_ ? tremble_ : 0.0;
    for (PlayerId i = 0; i < game_.num_players(); ++i) {
      RegretMatchingRow(regrets_, i, last_[i], mu_, tremble, out.probs[i]);
    }
  }

  void Observe(const JointAction& played, const SatisfactionTable& table,
               const MixedAction& played_from) override {
    if (bandit_) {
      outcome_.satisfied.resize(played.size());
      for (PlayerId i = 0; i < played.size(); ++i) {
        outcome_.satisfied[i] = table.Contains(i, played[i]);
      }
      regrets_.ObserveBandit(played, outcome_, played_from);
    } else {
      regrets_.ObserveFullInformation(played, table);
    }
    last_ = played;
    ++t_;
  }

  const RegretState* regrets() const override { return &regrets_; }

 private:
  GameDefinition game_;
  bool bandit_;
  double mu_;
  double tremble_;
  int cutoff_;
  RegretState regrets_;
  JointAction last_;
  SatisfactionOutcome outcome_;
};

}  // namespace

std::unique_ptr<Learner> MakeLearner(const GameDefinition& game, const LearnerConfig& config,
                                     int total_iterations) {
  config.Validate(game);
  switch (config.algorithm) {
    case Algorithm::kPselUniform:
      return std::make_unique<PselLearner>(game, PselMode::kUniform);
    case Algorithm::kPselReinforced:
      return std::make_unique<PselLearner>(game, PselMode::kReinforced);
    case Algorithm::kSra:
      return std::make_unique<SraLearner>(game, config.sra_max_movers);
    case Algorithm::kRm:
      return std::make_unique<RegretLearner>(game, false, config.ResolvedMu(game), 0.0, 0);
    case Algorithm::kRmrl:
      return std::make_unique<RegretLearner>(game, true, config.ResolvedMu(game), config.tremble,
                                             config.ResolvedTrembleCutoff(total_iterations));
  }
  throw ConfigError("unknown algorithm");
}

}  // namespace satgame
