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

#include "satgame/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "satgame/errors.h"

namespace satgame {
namespace {

void RequireDeterministic(const GameDefinition& game, const char* what) {
  if (!game.is_deterministic()) {
    throw UnsupportedGameError(std::string(what) +
                               " needs a deterministic game; estimate stochastic games by sampling");
  }
}

}  // namespace

JointPmf JointPmf::PointMass(const JointAction& a) {
  JointPmf pmf;
  pmf.Add(a, 1.0);
  return pmf;
}

void JointPmf::Add(const JointAction& a, double p) { support_[a] += p; }

double JointPmf::TotalMass() const {
  double total = 0.0;
  for (const auto& [a, p] : support_) total += p;
  return total;
}

double JointPmf::Probability(const JointAction& a) const {
  auto it = support_.find(a);
  return it == support_.end() ? 0.0 : it->second;
}

std::vector<double> JointPmf::Marginal(PlayerId i, int num_actions) const {
  std::vector<double> marginal(num_actions, 0.0);
  for (const auto& [a, p] : support_) marginal[a[i]] += p;
  return marginal;
}

std::vector<std::pair<JointAction, double>> JointPmf::Conditional(PlayerId i,
                                                                  ActionId a_i) const {
  double mass = 0.0;
  for (const auto& [a, p] : support_) {
    if (a[i] == a_i) mass += p;
  }
  if (!(mass > 0.0)) {
    throw UndefinedConditionalError("player " + std::to_string(i) + " plays action " +
                                    std::to_string(a_i) + " with probability zero");
  }
  std::vector<std::pair<JointAction, double>> out;
  for (const auto& [a, p] : support_) {
    if (a[i] == a_i) out.emplace_back(a, p / mass);
  }
  return out;
}

void JointPmf::Validate(const GameDefinition& game, double tol_mass) const {
  if (support_.empty()) throw ArgumentError("pmf has empty support");
  for (const auto& [a, p] : support_) {
    game.ValidateProfile(a);
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ArgumentError("negative or non-finite probability at " + a.ToString());
    }
  }
  double total = TotalMass();
  if (std::abs(total - 1.0) > tol_mass) {
    throw ArgumentError("pmf mass " + std::to_string(total) + " differs from 1");
  }
}

double ProbSatisfaction(const GameDefinition& game, const JointPmf& pmf, PlayerId i) {
  RequireDeterministic(game, "ProbSatisfaction");
  game.ValidatePlayer(i);
  pmf.Validate(game);
  std::vector<std::uint8_t> row(game.num_actions(i));
  const EnvSample trivial;
  double total = 0.0;
  for (const auto& [a, p] : pmf.support()) {
    game.correspondence().SatisfyingActions(i, a, trivial, row);
    if (row[a[i]]) total += p;
  }
  return total;
}

std::vector<double> SatisfactionProbabilities(const GameDefinition& game, const JointPmf& pmf) {
  RequireDeterministic(game, "SatisfactionProbabilities");
  pmf.Validate(game);
  SatisfactionTable table = game.MakeTable();
  const EnvSample trivial;
  std::vector<double> out(game.num_players(), 0.0);
  for (const auto& [a, p] : pmf.support()) {
    game.FillTable(a, trivial, table);
    for (PlayerId i = 0; i < game.num_players(); ++i) {
      if (table.Contains(i, a[i])) out[i] += p;
    }
  }
  return out;
}

double ConditionalRegret(const GameDefinition& game, const JointPmf& pmf, PlayerId i,
                         ActionId a_i, ActionId b) {
  RequireDeterministic(game, "ConditionalRegret");
  game.ValidateAction(i, a_i);
  game.ValidateAction(i, b);
  pmf.Validate(game);
  if (a_i == b) {
    pmf.Conditional(i, a_i);  // still reject undefined conditionals
    return 0.0;
  }
  std::vector<std::uint8_t> row(game.num_actions(i));
  const EnvSample trivial;
  double deviate = 0.0;
  double stay = 0.0;
  for (const auto& [a, p] : pmf.Conditional(i, a_i)) {
    game.correspondence().SatisfyingActions(i, a, trivial, row);
    if (row[b]) deviate += p;
    if (row[a_i]) stay += p;
  }
  return deviate - stay;
}

std::pair<bool, RegretReport> IsCorrelatedEquilibrium(const GameDefinition& game,
                                                      const JointPmf& pmf, double tol) {
  RequireDeterministic(game, "IsCorrelatedEquilibrium");
  if (tol < 0.0) throw ArgumentError("tolerance must be non-negative");
  pmf.Validate(game);
  const int n = game.num_players();
  RegretReport report;
  report.regrets.resize(n);
  report.num_actions.assign(game.action_counts().begin(), game.action_counts().end());

  const EnvSample trivial;
  bool ok = true;
  for (PlayerId i = 0; i < n; ++i) {
    const int m = game.num_actions(i);
    std::vector<double> deviate(static_cast<std::size_t>(m) * m, 0.0);
    std::vector<double> stay(m, 0.0);
    std::vector<double> marginal(m, 0.0);
    std::vector<std::uint8_t> row(m);
    for (const auto& [a, p] : pmf.support()) {
      const ActionId x = a[i];
      game.correspondence().SatisfyingActions(i, a, trivial, row);
      marginal[x] += p;
      if (row[x]) stay[x] += p;
      for (ActionId b = 0; b < m; ++b) {
        if (row[b]) deviate[static_cast<std::size_t>(x) * m + b] += p;
      }
    }
    auto& r = report.regrets[i];
    r.assign(static_cast<std::size_t>(m) * m, 0.0);
    for (ActionId x = 0; x < m; ++x) {
      if (!(marginal[x] > 0.0)) continue;
      for (ActionId b = 0; b < m; ++b) {
        if (b == x) continue;
        const double value = (deviate[static_cast<std::size_t>(x) * m + b] - stay[x]) / marginal[x];
        r[static_cast<std::size_t>(x) * m + b] = value;
        report.max_positive_regret = std::max(report.max_positive_regret, value);
        if (value > tol) ok = false;
      }
    }
  }
  return {ok, std::move(report)};
}

bool IsPureSe(const GameDefinition& game, const JointAction& a) {
  RequireDeterministic(game, "IsPureSe");
  return SatisfiedPartition(game, a).NumSatisfied() == game.num_players();
}

GseVerdict IsPureGse(const GameDefinition& game, const JointAction& a) {
  RequireDeterministic(game, "IsPureGse");
  game.ValidateProfile(a);
  SatisfactionTable table = game.MakeTable();
  game.FillTable(a, EnvSample{}, table);
  GseVerdict verdict;
  verdict.is_gse = true;
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    if (table.Contains(i, a[i])) {
      verdict.satisfied_players.push_back(i);
      continue;
    }
    auto row = table.Row(i);
    if (std::none_of(row.begin(), row.end(), [](std::uint8_t f) { return f != 0; })) {
      verdict.unsatisfied_players.push_back(i);
    } else {
      verdict.is_gse = false;
    }
  }
  return verdict;
}

GseVerdict IsMixedGse(const GameDefinition& game, const JointPmf& pmf, double tol) {
  if (tol < 0.0) throw ArgumentError("tolerance must be non-negative");
  const std::vector<double> probs = SatisfactionProbabilities(game, pmf);
  GseVerdict verdict;
  verdict.is_gse = true;
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    if (probs[i] >= 1.0 - tol) {
      verdict.satisfied_players.push_back(i);
    } else if (probs[i] <= tol) {
      verdict.unsatisfied_players.push_back(i);
    } else {
      verdict.is_gse = false;
    }
  }
  return verdict;
}

double HannanRegret(const GameDefinition& game, const JointPmf& pmf, PlayerId i, ActionId a_i) {
  RequireDeterministic(game, "HannanRegret");
  game.ValidateAction(i, a_i);
  pmf.Validate(game);
  std::vector<std::uint8_t> row(game.num_actions(i));
  const EnvSample trivial;
  double fixed = 0.0;
  double follow = 0.0;
  for (const auto& [a, p] : pmf.support()) {
    game.correspondence().SatisfyingActions(i, a, trivial, row);
    if (row[a_i]) fixed += p;
    if (row[a[i]]) follow += p;
  }
  return fixed - follow;
}

bool IsHannanEquilibrium(const GameDefinition& game, const JointPmf& pmf, double tol) {
  RequireDeterministic(game, "IsHannanEquilibrium");
  if (tol < 0.0) throw ArgumentError("tolerance must be non-negative");
  pmf.Validate(game);
  const EnvSample trivial;
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    const int m = game.num_actions(i);
    std::vector<double> fixed(m, 0.0);
    double follow = 0.0;
    std::vector<std::uint8_t> row(m);
    for (const auto& [a, p] : pmf.support()) {
      game.correspondence().SatisfyingActions(i, a, trivial, row);
      if (row[a[i]]) follow += p;
      for (ActionId b = 0; b < m; ++b) {
        if (row[b]) fixed[b] += p;
      }
    }
    for (ActionId b = 0; b < m; ++b) {
      if (fixed[b] - follow > tol) return false;
    }
  }
  return true;
}

PureEquilibria EnumeratePureEquilibria(const GameDefinition& game, std::uint64_t cap) {
  RequireDeterministic(game, "EnumeratePureEquilibria");
  CountProfiles(game.action_counts(), cap);
  PureEquilibria out;
  ForEachProfile(game.action_counts(), [&](const JointAction& a) {
    GseVerdict verdict = IsPureGse(game, a);
    if (verdict.is_gse) {
      if (verdict.unsatisfied_players.empty()) out.satisfaction.push_back(a);
      out.generalized.emplace_back(a, std::move(verdict));
    }

    // Best-response check on u_i(a) = 1{a_i in f_i(a_{-i})}.
    bool nash = true;
    for (PlayerId i = 0; i < game.num_players() && nash; ++i) {
      const int current = NaturalUtility(game, i, a);
      JointAction deviation = a;
      for (ActionId b = 0; b < game.num_actions(i); ++b) {
        if (b == a[i]) continue;
        deviation[i] = b;
        if (NaturalUtility(game, i, deviation) > current) {
          nash = false;
          break;
        }
      }
    }
    if (nash) out.nash.push_back(a);
  });
  return out;
}

PureGseEstimate EstimatePureGse(const GameDefinition& game, const JointAction& a, int samples,
                                Rng& rng, double threshold) {
  if (samples < 1) throw ArgumentError("need at least one environment sample");
  game.ValidateProfile(a);
  const int n = game.num_players();
  SatisfactionTable table = game.MakeTable();
  std::vector<std::vector<int>> counts(n);
  for (PlayerId i = 0; i < n; ++i) counts[i].assign(game.num_actions(i), 0);
  for (int s = 0; s < samples; ++s) {
    const EnvSample env = game.SampleEnv(rng);
    game.FillTable(a, env, table);
    for (PlayerId i = 0; i < n; ++i) {
      for (ActionId b = 0; b < game.num_actions(i); ++b) counts[i][b] += table.Contains(i, b);
    }
  }

  PureGseEstimate out;
  out.verdict.is_gse = true;
  out.satisfaction.resize(n);
  for (PlayerId i = 0; i < n; ++i) {
    const double here = static_cast<double>(counts[i][a[i]]) / samples;
    out.satisfaction[i] = here;
    if (here >= 1.0 - threshold) {
      out.verdict.satisfied_players.push_back(i);
      continue;
    }
    bool stuck = here <= threshold;
    for (ActionId b = 0; b < game.num_actions(i) && stuck; ++b) {
      if (static_cast<double>(counts[i][b]) / samples > threshold) stuck = false;
    }
    if (stuck) {
      out.verdict.unsatisfied_players.push_back(i);
    } else {
      out.verdict.is_gse = false;
    }
  }
  return out;
}

}  // namespace satgame
