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

#ifndef SATGAME_EQUILIBRIUM_H_
#define SATGAME_EQUILIBRIUM_H_

// Exact equilibrium verifiers for the natural binary-utility view of a
// satisfaction game, plus brute-force enumeration for small games.
//
// All verifiers that evaluate probabilities exactly require a deterministic
// game; stochastic games go through EstimatePureGse instead.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "satgame/game.h"
#include "satgame/random.h"

namespace satgame {

inline constexpr double kMassTolerance = 1e-9;
inline constexpr double kExactTolerance = 1e-9;
inline constexpr double kEmpiricalTolerance = 0.05;

// Sparse probability mass function over joint actions. Iteration order is the
// lexicographic order of profiles, which keeps every derived sum reproducible.
class JointPmf {
 public:
  using Support = std::map<JointAction, double>;

  JointPmf() = default;
  explicit JointPmf(Support support) : support_(std::move(support)) {}

  static JointPmf PointMass(const JointAction& a);

  // Accumulates mass on `a`.
  void Add(const JointAction& a, double p);

  const Support& support() const { return support_; }
  bool empty() const { return support_.empty(); }
  double TotalMass() const;
  double Probability(const JointAction& a) const;

  // pi_i(.) over player i's actions.
  std::vector<double> Marginal(PlayerId i, int num_actions) const;

  // pi(. | a_i) as (profile, conditional probability) pairs. Throws
  // UndefinedConditionalError when pi_i(a_i) is zero.
  std::vector<std::pair<JointAction, double>> Conditional(PlayerId i, ActionId a_i) const;

  // Checks non-negativity, total mass, and that every profile fits `game`.
  void Validate(const GameDefinition& game, double tol_mass = kMassTolerance) const;

 private:
  Support support_;
};

struct RegretReport {
  // regrets[i][a * |A_i| + b] = R_i(a, b). Rows of zero-probability actions
  // are left at zero.
  std::vector<std::vector<double>> regrets;
  std::vector<int> num_actions;
  double max_positive_regret = 0.0;

  double At(PlayerId i, ActionId a, ActionId b) const {
    return regrets[i][static_cast<std::size_t>(a) * num_actions[i] + b];
  }
};

struct GseVerdict {
  bool is_gse = false;
  std::vector<PlayerId> satisfied_players;    // P_s
  std::vector<PlayerId> unsatisfied_players;  // P_u
};

// Pr_pi{A_i in f_i(A_{-i})}.
double ProbSatisfaction(const GameDefinition& game, const JointPmf& pmf, PlayerId i);

// The same quantity for every player in one pass over the support.
std::vector<double> SatisfactionProbabilities(const GameDefinition& game, const JointPmf& pmf);

// Pr_{pi|a_i}{b in f_i} - Pr_{pi|a_i}{a_i in f_i}.
double ConditionalRegret(const GameDefinition& game, const JointPmf& pmf, PlayerId i,
                         ActionId a_i, ActionId b);

// True iff every conditional regret over actions with positive marginal is at
// most `tol`. The report always carries the full regret matrices.
std::pair<bool, RegretReport> IsCorrelatedEquilibrium(const GameDefinition& game,
                                                      const JointPmf& pmf,
                                                      double tol = kExactTolerance);

bool IsPureSe(const GameDefinition& game, const JointAction& a);
GseVerdict IsPureGse(const GameDefinition& game, const JointAction& a);

// Every player's satisfaction probability is >= 1 - tol or <= tol.
GseVerdict IsMixedGse(const GameDefinition& game, const JointPmf& pmf,
                      double tol = kExactTolerance);

// Gain of committing to the fixed action a_i over following pi:
// Pr_pi{a_i in f_i(A_{-i})} - Pr_pi{A_i in f_i(A_{-i})}.
double HannanRegret(const GameDefinition& game, const JointPmf& pmf, PlayerId i, ActionId a_i);

bool IsHannanEquilibrium(const GameDefinition& game, const JointPmf& pmf,
                         double tol = kExactTolerance);

struct PureEquilibria {
  std::vector<JointAction> satisfaction;  // pure SE
  std::vector<std::pair<JointAction, GseVerdict>> generalized;  // pure GSE
  std::vector<JointAction> nash;  // pure NE of the natural normal-form game
};

// Exhaustive search. The NE list comes from a best-response check on the
// binary utilities, independent of IsPureGse.
PureEquilibria EnumeratePureEquilibria(const GameDefinition& game,
                                       std::uint64_t cap = kDefaultEnumerationCap);

// Monte Carlo analogue of IsPureGse for games with environment randomness.
// Over `samples` environment draws, a player counts as satisfied when its
// satisfaction frequency is >= 1 - threshold, and as unsatisfied when the
// frequency is <= threshold and every alternative action would also satisfy
// it with frequency <= threshold.
struct PureGseEstimate {
  GseVerdict verdict;
  std::vector<double> satisfaction;  // per-player frequency at the profile
};

PureGseEstimate EstimatePureGse(const GameDefinition& game, const JointAction& a, int samples,
                                Rng& rng, double threshold = kEmpiricalTolerance);

}  // namespace satgame

#endif  // SATGAME_EQUILIBRIUM_H_
