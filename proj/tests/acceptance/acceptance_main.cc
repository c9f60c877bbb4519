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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
//
// SATGAME_ACCEPTANCE_FAST=1 shortens the resource-game experiments to
// T = 5000 and R = 50 (the RM Prob(Equil) bar drops to 0.75). Everything else
// is identical in both modes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "satgame/equilibrium.h"
#include "satgame/game_files.h"
#include "satgame/games/fixtures.h"
#include "satgame/games/table_game.h"
#include "satgame/harness.h"
#include "satgame/learners.h"

namespace satgame {
namespace {

const std::filesystem::path kPresets = SATGAME_PRESET_DIR;
const std::filesystem::path kFixtures = SATGAME_FIXTURE_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Mode {
  bool fast = false;
  int iterations = 25000;
  int realizations = 250;
  double rm_equil_bar = 0.85;
};

Mode GetMode() {
  Mode m;
  const char* env = std::getenv("SATGAME_ACCEPTANCE_FAST");
  if (env != nullptr && std::string(env) != "0" && std::string(env) != "") {
    m.fast = true;
    m.iterations = 5000;
    m.realizations = 50;
    m.rm_equil_bar = 0.75;
  }
  return m;
}

std::string Format(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, x);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

void Progress(const std::string& line) {
  std::fprintf(stderr, "  .. %s\n", line.c_str());
  std::fflush(stderr);
}

// Same generator for criteria 1 and 2.
std::vector<GameDefinition> RandomGames() {
  Rng rng(20260101);
  std::uniform_int_distribution<int> players(2, 3);
  std::uniform_int_distribution<int> actions(2, 4);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::vector<GameDefinition> games;
  for (int k = 0; k < 200; ++k) {
    std::vector<int> counts(players(rng));
    for (int& c : counts) c = actions(rng);
    games.push_back(RandomTableGame(counts, density(rng), rng));
  }
  return games;
}

Outcome OracleEquivalence() {
  const auto start = std::chrono::steady_clock::now();
  int mismatched = 0;
  int se_outside = 0;
  std::size_t gse_total = 0;
  for (const GameDefinition& g : RandomGames()) {
    const PureEquilibria eq = EnumeratePureEquilibria(g);
    std::vector<JointAction> gse;
    for (const auto& [a, verdict] : eq.generalized) gse.push_back(a);
    gse_total += gse.size();
    mismatched += gse != eq.nash;
    for (const JointAction& a : eq.satisfaction) {
      se_outside += std::find(gse.begin(), gse.end(), a) == gse.end();
    }
  }
  const double secs = Seconds(start);
  std::ostringstream d;
  d << "200 games, " << gse_total << " pure GSE, GSE!=NE on " << mismatched
    << ", SE outside GSE " << se_outside << ", " << Format("%.2f", secs) << " s";
  return {mismatched == 0 && se_outside == 0 && secs < 10.0, d.str()};
}

Outcome TheoremOne() {
  Rng rng(7);
  int mixtures = 0;
  int failures = 0;
  for (const GameDefinition& g : RandomGames()) {
    std::map<std::vector<PlayerId>, std::vector<JointAction>> groups;
    for (const auto& [a, verdict] : EnumeratePureEquilibria(g).generalized) {
      groups[verdict.satisfied_players].push_back(a);
    }
    for (const auto& [partition, profiles] : groups) {
      for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> w(profiles.size());
        double total = 0.0;
        for (double& x : w) total += x = std::exponential_distribution<double>(1.0)(rng);
        JointPmf pmf;
        for (std::size_t k = 0; k < profiles.size(); ++k) pmf.Add(profiles[k], w[k] / total);
        const GseVerdict v = IsMixedGse(g, pmf, kExactTolerance);
        const bool ok = v.is_gse && v.satisfied_players == partition &&
                        IsCorrelatedEquilibrium(g, pmf, kExactTolerance).first;
        failures += !ok;
        ++mixtures;
      }
    }
  }
  std::ostringstream d;
  d << mixtures << " mixtures of same-partition pure GSE, " << failures << " failures";
  return {failures == 0 && mixtures > 0, d.str()};
}

Outcome CeInsideHe() {
  Rng rng(11);
  int ce = 0;
  int failures = 0;
  std::vector<GameDefinition> games;
  for (const FixtureGame& f : FixtureGames()) games.push_back(f.game);
  for (const GameDefinition& g : games) {
    std::vector<JointAction> profiles;
    ForEachProfile(g.action_counts(), [&](const JointAction& a) { profiles.push_back(a); });
    for (int rep = 0; rep < 1000; ++rep) {
      // Random support size so that sparse (often CE) pmfs show up too.
      std::vector<JointAction> support = profiles;
      std::shuffle(support.begin(), support.end(), rng);
      support.resize(1 + UniformIndex(rng, static_cast<int>(support.size())));
      std::vector<double> w(support.size());
      double total = 0.0;
      for (double& x : w) total += x = std::exponential_distribution<double>(1.0)(rng);
      JointPmf pmf;
      for (std::size_t k = 0; k < support.size(); ++k) pmf.Add(support[k], w[k] / total);
      const auto [is_ce, report] = IsCorrelatedEquilibrium(g, pmf, kExactTolerance);
      if (report.max_positive_regret > kExactTolerance) continue;
      ++ce;
      failures += !IsHannanEquilibrium(g, pmf, kExactTolerance);
    }
  }
  std::ostringstream d;
  d << games.size() * 1000 << " pmfs over " << games.size() << " fixture games, " << ce
    << " CE, " << failures << " CE not HE";
  return {failures == 0 && ce > 0, d.str()};
}

Outcome RegretFixtures() {
  std::vector<std::string> bad;
  auto check = [&](const std::string& name, double got, double want) {
    if (!(std::abs(got - want) <= 1e-12)) bad.push_back(name);
  };
  const GameDefinition m = MatchingGame();
  JointPmf uniform;
  for (ActionId x = 0; x < 2; ++x) {
    for (ActionId y = 0; y < 2; ++y) uniform.Add({x, y}, 0.25);
  }
  const JointPmf off = JointPmf::PointMass({0, 1});
  check("conditional uniform", ConditionalRegret(m, uniform, 0, 0, 1), 0.0);
  check("conditional point", ConditionalRegret(m, off, 0, 0, 1), 1.0);
  check("conditional self", ConditionalRegret(m, off, 0, 0, 0), 0.0);
  check("ce point max", IsCorrelatedEquilibrium(m, off).second.max_positive_regret, 1.0);
  check("hannan uniform", HannanRegret(m, uniform, 0, 1), 0.0);
  check("hannan point", HannanRegret(m, off, 0, 1), 1.0);

  // Full-information regrets.
  {
    PlayHistory h;
    h.Append(MakeRecord(m, {0, 1}, {}));
    check("rm t=1", RmUpdateRegrets(m, h).Regret(0, 0, 1), 1.0);
    h.Append(MakeRecord(m, {0, 0}, {}));
    const RegretState r = RmUpdateRegrets(m, h);
    check("rm t=2", r.Regret(0, 0, 1), 0.0);
    check("rm unplayed", r.Regret(0, 1, 0), 0.0);
  }
  // Play rule from R(0,1) = 0.5, R(0,2) = -0.2 over 10 iterations.
  {
    RegretState r(std::vector<int>{3, 1});
    auto feed = [&](bool s0, bool s1, bool s2, int times) {
      SatisfactionTable t(std::vector<int>{3, 1});
      t.Row(0)[0] = s0;
      t.Row(0)[1] = s1;
      t.Row(0)[2] = s2;
      for (int k = 0; k < times; ++k) r.ObserveFullInformation({0, 0}, t);
    };
    feed(false, true, false, 5);
    feed(true, true, false, 2);
    feed(false, false, false, 3);
    const MixedAction p = RmStep(r, {0, 0}, 4.0);
    check("rm step stay", p.probs[0][0], 0.875);
    check("rm step move", p.probs[0][1], 0.125);
    check("rm step negative", p.probs[0][2], 0.0);
    RegretState eq(std::vector<int>{3, 1});
    SatisfactionTable t(std::vector<int>{3, 1});
    t.Row(0)[1] = 1;
    t.Row(0)[2] = 1;
    eq.ObserveFullInformation({0, 0}, t);
    check("rm step 1/m", RmStep(eq, {0, 0}, 3.0).probs[0][0], 1.0 / 3);
    check("rm step no regret", RmStep(RegretState(std::vector<int>{3, 1}), {0, 0}, 4.0).probs[0][0],
          1.0);
  }
  // Bandit estimate: played a' satisfied with Pr{a} = 0.25, Pr{a'} = 0.5.
  {
    RegretState r(std::vector<int>{3, 2});
    MixedAction p;
    p.probs = {{0.25, 0.5, 0.25}, {0.5, 0.5}};
    SatisfactionOutcome o;
    o.satisfied = {true, false};
    r.ObserveBandit({1, 0}, o, p);
    check("rmrl t=1", r.Regret(0, 0, 1), 0.5);
    check("rmrl unplayed", r.Regret(1, 0, 1), 0.0);
    RegretState two(std::vector<int>{2, 2});
    check("rmrl tremble 2", RmrlStep(two, {0, 0}, 2.0, 0.2).probs[0][1], 0.1);
    RegretState four(std::vector<int>{4, 2});
    const MixedAction q = RmrlStep(four, {0, 0}, 8.0, 0.1);
    check("rmrl tremble 4 stay", q.probs[0][0], 0.925);
    check("rmrl tremble 4 move", q.probs[0][3], 0.025);
  }
  std::ostringstream d;
  d << (bad.empty() ? std::string("all hand-evaluated values match to 1e-12")
                    : "mismatch:");
  for (const auto& b : bad) d << ' ' << b;
  return {bad.empty(), d.str()};
}

Outcome RmrlEstimator() {
  const auto start = std::chrono::steady_clock::now();
  const GameDefinition g = MatchingGame();
  MixedAction p;
  p.probs = {{0.3, 0.7}, {0.6, 0.4}};
  const int t = 100000;
  Rng rng(5);
  RegretState r(std::vector<int>{2, 2});
  double sum[2][2][2] = {};
  double sq[2][2][2] = {};
  JointAction a(std::vector<ActionId>(2, 0));
  for (int n = 0; n < t; ++n) {
    p.SampleInto(rng, a);
    const SatisfactionOutcome o = SatisfiedPartition(g, a);
    r.ObserveBandit(a, o, p);
    for (PlayerId i = 0; i < 2; ++i) {
      const int u = o.satisfied[i] ? 1 : 0;
      for (ActionId x = 0; x < 2; ++x) {
        for (ActionId y = 0; y < 2; ++y) {
          double inc = 0.0;
          if (a[i] == y) inc += u * p.probs[i][x] / p.probs[i][y];
          if (a[i] == x) inc -= u;
          sum[i][x][y] += inc;
          sq[i][x][y] += inc * inc;
        }
      }
    }
  }
  double worst = 0.0;  // largest |mean - target| in standard errors
  bool consistent = true;
  for (PlayerId i = 0; i < 2; ++i) {
    const std::vector<double>& other = p.probs[1 - i];
    for (ActionId x = 0; x < 2; ++x) {
      for (ActionId y = 0; y < 2; ++y) {
        if (x == y) continue;
        // Matching: action b satisfies iff the opponent also plays b.
        const double target = p.probs[i][x] * (other[y] - other[x]);
        const double mean = sum[i][x][y] / t;
        const double se = std::sqrt((sq[i][x][y] / t - mean * mean) / t);
        consistent = consistent && std::abs(r.Regret(i, x, y) - mean) <= 1e-12;
        worst = std::max(worst, std::abs(mean - target) / se);
      }
    }
  }
  const double secs = Seconds(start);
  std::ostringstream d;
  d << "t=1e5, worst deviation " << Format("%.2f", worst) << " SE, "
    << Format("%.2f", secs) << " s";
  return {consistent && worst <= 3.0 && secs < 30.0, d.str()};
}

ExperimentConfig Preset(const std::string& name) {
  return LoadExperimentConfig(kPresets / (name + ".ini"));
}

// Per-instance metrics for the resource-game tables.
using InstanceMetrics = std::vector<MetricsTable>;

InstanceMetrics RunTable(const std::string& preset, const Mode& mode) {
  InstanceMetrics out;
  for (int k = 0; k < 10; ++k) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentConfig c = Preset(preset);
    c.iterations = mode.iterations;
    c.realizations = mode.realizations;
    c.instance_index = static_cast<std::uint64_t>(k);
    const ExperimentResult result = RunExperiment(c);
    std::ostringstream line;
    line << preset << " instance " << k << " (" << result.game_description << ")";
    for (const AlgorithmMetrics& m : result.metrics.rows) {
      line << "\n       " << m.algorithm << " equil=" << Format("%.3f", m.prob_equil)
           << " sat=" << Format("%.3f", m.prob_sat) << " conv=" << Format("%.3f", m.prob_converged);
    }
    line << "\n       " << Format("%.0f", Seconds(start)) << " s";
    Progress(line.str());
    out.push_back(result.metrics);
  }
  return out;
}

const AlgorithmMetrics& Get(const MetricsTable& t, const char* algo) {
  const AlgorithmMetrics* m = t.Find(algo);
  if (m == nullptr) throw std::runtime_error(std::string("missing algorithm ") + algo);
  return *m;
}

Outcome TableOne(const InstanceMetrics& t1, const Mode& mode) {
  int a = 0, b = 0, c = 0;
  for (const MetricsTable& t : t1) {
    const auto& rm = Get(t, "rm");
    const auto& rmrl = Get(t, "rmrl");
    const auto& psel = Get(t, "psel_uniform");
    a += rm.prob_equil >= mode.rm_equil_bar;
    b += rm.prob_equil > psel.prob_equil && rmrl.prob_equil > psel.prob_equil;
    c += rm.prob_sat >= psel.prob_sat + 0.03 && rmrl.prob_sat >= psel.prob_sat + 0.03;
  }
  std::ostringstream d;
  d << "(a) RM equil>=" << Format("%.2f", mode.rm_equil_bar) << " on " << a
    << "/10 (need 8); (b) RM,RMRL equil > PSEL on " << b
    << "/10 (need 9); (c) RM,RMRL sat >= PSEL+0.03 on " << c << "/10 (need 7)";
  return {a >= 8 && b >= 9 && c >= 7, d.str()};
}

Outcome TableTwo(const InstanceMetrics& t1, const InstanceMetrics& t2) {
  std::vector<std::string> not_lower;
  std::ostringstream sats;
  for (const AlgorithmMetrics& row : t1.front().rows) {
    double s1 = 0.0, s2 = 0.0;
    for (const MetricsTable& t : t1) s1 += Get(t, row.algorithm.c_str()).prob_sat / t1.size();
    for (const MetricsTable& t : t2) s2 += Get(t, row.algorithm.c_str()).prob_sat / t2.size();
    sats << ' ' << row.algorithm << ' ' << Format("%.3f", s1) << "->" << Format("%.3f", s2);
    if (!(s2 < s1)) not_lower.push_back(row.algorithm);
  }
  int rm_over_psel = 0;
  for (const MetricsTable& t : t2) {
    rm_over_psel += Get(t, "rm").prob_equil > Get(t, "psel_uniform").prob_equil;
  }
  std::ostringstream d;
  d << "mean Prob(Sat) N=20->N=30:" << sats.str() << "; not lower for "
    << not_lower.size() << "; RM equil > PSEL on " << rm_over_psel << "/10 (need 8)";
  return {not_lower.empty() && rm_over_psel >= 8, d.str()};
}

struct RatRun {
  std::string preset;
  ExperimentConfig config;
  ExperimentResult result;
};

std::vector<RatRun> RunRat() {
  std::vector<RatRun> runs;
  for (const char* name : {"rat_1_5", "rat_2_0", "rat_2_2", "rat_2_8"}) {
    const auto start = std::chrono::steady_clock::now();
    RatRun run{name, Preset(name), {}};
    run.result = RunExperiment(run.config);
    std::ostringstream line;
    line << name << " " << Format("%.0f", Seconds(start)) << " s";
    for (const AlgorithmMetrics& m : run.result.metrics.rows) {
      line << " | " << m.algorithm << " conv=" << Format("%.2f", m.prob_converged)
           << " median_t=" << Format("%.0f", m.median_convergence_time)
           << " equil=" << Format("%.2f", m.prob_equil);
    }
    Progress(line.str());
    runs.push_back(std::move(run));
  }
  return runs;
}

std::vector<const RunRecord*> Records(const RatRun& run, const std::string& algo) {
  std::vector<const RunRecord*> out;
  for (const RunRecord& r : run.result.records) {
    if (r.algorithm == algo) out.push_back(&r);
  }
  return out;
}

bool ReachedSe(const RunRecord& r) {
  return r.converged && r.equilibrium && r.final_unsatisfied == 0;
}

double Median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double MedianSeTime(const std::vector<const RunRecord*>& records) {
  std::vector<double> times;
  for (const RunRecord* r : records) {
    if (ReachedSe(*r)) times.push_back(r->convergence_time);
  }
  return Median(times);
}

Outcome RatRegimes(const std::vector<RatRun>& rat) {
  auto count = [](const std::vector<const RunRecord*>& rs, auto pred) {
    return static_cast<int>(std::count_if(rs.begin(), rs.end(), [&](const RunRecord* r) { return pred(*r); }));
  };
  const auto rm15 = Records(rat[0], "rm"), rm20 = Records(rat[1], "rm");
  const auto rm22 = Records(rat[2], "rm"), rm28 = Records(rat[3], "rm");
  const auto rl15 = Records(rat[0], "rmrl"), rl20 = Records(rat[1], "rmrl");
  const int se15 = count(rm15, [](const RunRecord& r) { return ReachedSe(r) && r.convergence_time < 1000; });
  const int se20 = count(rm20, ReachedSe);
  const double t15 = MedianSeTime(rm15), t20 = MedianSeTime(rm20);
  const int gse22 = count(rm22, [](const RunRecord& r) {
    return r.converged && r.equilibrium && r.final_unsatisfied > 0;
  });
  const int mixed28 = count(rm28, [](const RunRecord& r) {
    return !r.converged && r.equilibrium && r.mixed;
  });
  const int rl_se15 = count(rl15, ReachedSe), rl_se20 = count(rl20, ReachedSe);
  const double rt15 = MedianSeTime(rl15), rt20 = MedianSeTime(rl20);

  std::vector<std::pair<std::string, bool>> clauses = {
      {"1.5 RM SE<1000 " + std::to_string(se15) + "/20", se15 >= 18},
      {"2.0 RM SE " + std::to_string(se20) + "/20, median " + Format("%.0f", t20) + " vs " +
           Format("%.0f", t15),
       se20 >= 18 && t20 > t15},
      {"2.2 RM GSE with unsatisfied " + std::to_string(gse22) + "/20", gse22 >= 15},
      {"2.8 RM mixed GSE " + std::to_string(mixed28) + "/20", mixed28 >= 10},
      {"RMRL 1.5 SE " + std::to_string(rl_se15) + "/20, median " + Format("%.0f", rt15),
       rl_se15 >= 18 && rt15 >= t15},
      {"RMRL 2.0 SE " + std::to_string(rl_se20) + "/20, median " + Format("%.0f", rt20),
       rl_se20 >= 18 && rt20 >= t20},
  };
  bool pass = true;
  std::ostringstream d;
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    d << (k ? "; " : "") << clauses[k].first << (clauses[k].second ? " ok" : " MISS");
    pass = pass && clauses[k].second;
  }
  return {pass, d.str()};
}

Outcome RmSoundness(const std::vector<RatRun>& rat) {
  // Per experiment: converged RM runs and how many of them are not a pure GSE.
  std::vector<std::string> lines;
  int converged = 0;
  int bad = 0;
  auto audit = [&](const std::string& name, const GameDefinition& g,
                   const std::vector<RunRecord>& records) {
    int c = 0, b = 0;
    for (const RunRecord& r : records) {
      if (r.algorithm != "rm" || !r.converged) continue;
      ++c;
      b += !IsPureGse(g, r.final_profile).is_gse;
    }
    converged += c;
    bad += b;
    lines.push_back(name + " " + std::to_string(b) + "/" + std::to_string(c));
  };
  for (const RatRun& run : rat) {
    audit(run.preset, BuildExperimentGame(run.config, 0), run.result.records);
  }
  for (const char* file : {"matching.game", "mismatch.game", "never_satisfiable.game",
                           "universal_clipping.game", "dating.game", "rat_small.game"}) {
    ExperimentConfig c;
    c.name = file;
    c.game = IniDocument::Load(kFixtures / file);
    c.algorithms = {ParseAlgorithm("rm")};
    c.iterations = 5000;
    c.realizations = 20;
    c.seed = 1;
    const std::string name(file);
    audit(name.substr(0, name.find('.')), BuildExperimentGame(c, 0), RunExperiment(c).records);
  }
  std::ostringstream d;
  d << bad << " of " << converged << " converged RM runs are not a pure GSE (per game:";
  for (const auto& l : lines) d << ' ' << l;
  d << ')';
  return {bad == 0 && converged > 0, d.str()};
}

Outcome Determinism() {
  auto csv = [](const std::string& preset, int threads) {
    ExperimentConfig c = Preset(preset);
    c.iterations = 1500;
    c.realizations = 6;
    if (preset == "table1") {
      c.algorithms = {ParseAlgorithm("rm"), ParseAlgorithm("rmrl"), ParseAlgorithm("psel_reinforced"),
                      ParseAlgorithm("sra_2")};
    }
    c.trajectory = true;
    c.threads = threads;
    const ExperimentResult result = RunExperiment(c);
    std::ostringstream out;
    WriteRealizationsCsv(out, c, result);
    WriteSummaryCsv(out, c, result);
    WriteTrajectoryCsv(out, result);
    return out.str();
  };
  int compared = 0;
  int differ = 0;
  for (const char* preset : {"table1", "rat_2_2"}) {
    const std::string ref = csv(preset, 1);
    for (int threads : {1, 2, 4, 8}) {
      ++compared;
      differ += csv(preset, threads) != ref;
    }
  }
  std::ostringstream d;
  d << compared << " repeated runs at 1/2/4/8 workers, " << differ << " differ byte-wise";
  return {differ == 0, d.str()};
}

}  // namespace
}  // namespace satgame

int main() {
  using namespace satgame;
  const Mode mode = GetMode();
  std::printf("acceptance mode: %s (resource tables T=%d R=%d)\n", mode.fast ? "fast" : "full",
              mode.iterations, mode.realizations);
  std::fflush(stdout);
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s [%d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
                Seconds(start));
    std::fflush(stdout);
  };

  report(1, "Oracle equivalence", OracleEquivalence);
  report(2, "Mixtures of pure GSE are CE", TheoremOne);
  report(3, "CE inside HE", CeInsideHe);
  report(4, "Regret fixtures", RegretFixtures);
  report(5, "RMRL estimator", RmrlEstimator);

  InstanceMetrics t1, t2;
  report(6, "Resource game N=20", [&] {
    t1 = RunTable("table1", mode);
    return TableOne(t1, mode);
  });
  report(7, "Resource game N=30 direction", [&] {
    if (t1.empty()) return Outcome{false, "N=20 results unavailable"};
    t2 = RunTable("table2", mode);
    return TableTwo(t1, t2);
  });
  std::vector<RatRun> rat;
  report(8, "RAT regimes", [&] {
    rat = RunRat();
    return RatRegimes(rat);
  });
  report(9, "RM convergence implies pure GSE", [&] {
    if (rat.empty()) return Outcome{false, "RAT results unavailable"};
    return RmSoundness(rat);
  });
  report(10, "Determinism across workers", Determinism);

  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
