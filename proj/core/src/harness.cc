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

#include "satgame/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "satgame/equilibrium.h"
#include "satgame/errors.h"
#include "satgame/game_files.h"
#include "satgame/games/resource_allocation.h"

namespace satgame {
namespace {

constexpr std::uint64_t kInstanceTag = 0x696e7374616e6365ULL;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// FNV-1a, so seeds do not depend on the standard library's std::hash.
std::uint64_t LabelHash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool IsRegretAlgorithm(const LearnerConfig& learner) {
  return learner.algorithm == Algorithm::kRm || learner.algorithm == Algorithm::kRmrl;
}

std::string Fmt(double x) {
  if (std::isnan(x)) return "nan";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", x);
  return buffer;
}

double Mean(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (window < 2) throw ConfigError("window must be >= 2");
  if (iterations < window) {
    throw ConfigError("iterations (" + std::to_string(iterations) + ") must be >= window (" +
                      std::to_string(window) + ")");
  }
  if (realizations < 1) throw ConfigError("realizations must be >= 1");
  if (env_samples < 1) throw ConfigError("env_samples must be >= 1");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  if (!(mixed_tolerance >= 0.0 && mixed_tolerance < 0.5)) {
    throw ConfigError("mixed_tolerance must lie in [0, 0.5)");
  }
  if (algorithms.empty()) throw ConfigError("no algorithms configured");
  if (game.Section("game") == nullptr) throw ConfigError("missing [game] section");
}

ExperimentConfig ParseExperimentConfig(const IniDocument& doc) {
  doc.CheckKeys("experiment", {"name", "algorithms", "iterations", "realizations", "window",
                               "env_samples", "seed", "instance_index", "redraw_instance",
                               "threads", "mixed_tolerance", "trajectory"});
  doc.CheckKeys("learner", {"mu", "tremble", "tremble_cutoff", "sra_max_movers"});
  ExperimentConfig config;
  const ExperimentConfig defaults;
  config.name = doc.GetString("experiment", "name", defaults.name);
  config.iterations = static_cast<int>(doc.GetInt("experiment", "iterations", defaults.iterations));
  config.realizations =
      static_cast<int>(doc.GetInt("experiment", "realizations", defaults.realizations));
  config.window = static_cast<int>(doc.GetInt("experiment", "window", defaults.window));
  config.env_samples =
      static_cast<int>(doc.GetInt("experiment", "env_samples", defaults.env_samples));
  config.seed = static_cast<std::uint64_t>(doc.GetInt("experiment", "seed", 0));
  config.instance_index = static_cast<std::uint64_t>(doc.GetInt("experiment", "instance_index", 0));
  config.redraw_instance = doc.GetBool("experiment", "redraw_instance", false);
  config.threads = static_cast<int>(doc.GetInt("experiment", "threads", 0));
  config.mixed_tolerance =
      doc.GetDouble("experiment", "mixed_tolerance", defaults.mixed_tolerance);
  config.trajectory = doc.GetBool("experiment", "trajectory", false);

  const std::string labels = doc.GetString("experiment", "algorithms", "rm");
  for (const auto& label : SplitList(labels)) {
    LearnerConfig learner;
    try {
      learner = ParseAlgorithm(label);
    } catch (const ConfigError& e) {
      const IniSection* s = doc.Section("experiment");
      const IniEntry* entry = s ? s->Find("algorithms") : nullptr;
      doc.Fail(entry ? entry->line : 0, e.what());
    }
    learner.mu = doc.GetDouble("learner", "mu", learner.mu);
    learner.tremble = doc.GetDouble("learner", "tremble", learner.tremble);
    learner.tremble_cutoff =
        static_cast<int>(doc.GetInt("learner", "tremble_cutoff", learner.tremble_cutoff));
    if (learner.algorithm == Algorithm::kSra && label == "sra") {
      learner.sra_max_movers =
          static_cast<int>(doc.GetInt("learner", "sra_max_movers", learner.sra_max_movers));
    }
    config.algorithms.push_back(learner);
  }
  config.game = doc.Without({"experiment", "learner"});
  if (config.game.Section("game") == nullptr) doc.Fail(0, "missing [game] section");
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  return ParseExperimentConfig(IniDocument::Load(path));
}

int ResolveThreads(int requested, std::size_t jobs) {
  long n = requested > 0 ? requested : static_cast<long>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SATGAME_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min(n, cap);
  }
  n = std::min<long>(n, static_cast<long>(jobs));
  return static_cast<int>(std::max<long>(n, 1));
}

GameDefinition BuildExperimentGame(const ExperimentConfig& config, int realization) {
  const std::uint64_t instance_seed =
      config.redraw_instance
          ? DeriveSeed(config.seed, {kInstanceTag, config.instance_index,
                                     static_cast<std::uint64_t>(realization) + 1})
          : DeriveSeed(config.seed, {kInstanceTag, config.instance_index});
  return BuildGame(config.game, instance_seed);
}

std::uint64_t RealizationSeed(const ExperimentConfig& config, const LearnerConfig& learner,
                              int realization) {
  return DeriveSeed(config.seed, {config.instance_index, LabelHash(learner.Label()),
                                  static_cast<std::uint64_t>(realization)});
}

RunRecord RunRealization(const ExperimentConfig& config, const GameDefinition& game,
                         const LearnerConfig& learner_config, int realization) {
  config.Validate();
  learner_config.Validate(game);
  const int n = game.num_players();
  const int T = config.iterations;
  const int half_start = T - T / 2;
  const bool regret_based = IsRegretAlgorithm(learner_config);
  const bool deterministic = game.is_deterministic();

  Rng rng(RealizationSeed(config, learner_config, realization));
  std::unique_ptr<Learner> learner = MakeLearner(game, learner_config, T);
  MixedAction mix;
  JointAction a(std::vector<ActionId>(n, 0));
  JointAction previous;
  SatisfactionTable table = game.MakeTable();
  EnvSample env;

  RunRecord record;
  record.realization = realization;
  record.algorithm = learner_config.Label();
  if (config.trajectory) record.trajectory.reserve(T);

  int run_length = 0;
  int run_start = 0;
  long long total_satisfied = 0;
  int final_satisfied = 0;
  std::vector<JointAction> tail;  // deterministic mixed check
  std::vector<long long> tail_satisfied(n, 0);  // stochastic mixed check
  if (regret_based && deterministic) tail.reserve(T / 2);

  for (int t = 0; t < T; ++t) {
    learner->NextMixedAction(rng, mix);
    mix.SampleInto(rng, a);
    env = game.SampleEnv(rng);
    game.FillTable(a, env, table);
    learner->Observe(a, table, mix);

    int satisfied = 0;
    for (PlayerId i = 0; i < n; ++i) {
      const bool s = table.Contains(i, a[i]);
      satisfied += s;
      if (t >= half_start && s) ++tail_satisfied[i];
    }
    total_satisfied += satisfied;
    final_satisfied = satisfied;
    if (config.trajectory) record.trajectory.push_back(satisfied);
    if (t > 0 && a == previous) {
      ++run_length;
    } else {
      run_length = 1;
      run_start = t;
      previous = a;
    }
    if (t >= half_start && regret_based && deterministic) tail.push_back(a);
  }

  record.final_profile = a;
  record.avg_utility = static_cast<double>(final_satisfied) / n;
  record.final_unsatisfied = n - final_satisfied;
  record.time_avg_utility = static_cast<double>(total_satisfied) / (static_cast<double>(n) * T);
  record.converged = run_length >= config.window;
  if (record.converged) record.convergence_time = run_start;

  if (const ResourceInstance* instance = AsResourceInstance(game)) {
    const std::vector<double> allocation = ResourceAllocate(*instance, a, env.values);
    record.alloc_eff = AllocationEfficiency(*instance, allocation);
  } else {
    record.alloc_eff = kNaN;
  }
  record.max_pos_regret =
      learner->regrets() != nullptr ? learner->regrets()->MaxPositiveRegret() : kNaN;

  if (deterministic) {
    record.satisfaction.resize(n);
    for (PlayerId i = 0; i < n; ++i) record.satisfaction[i] = table.Contains(i, a[i]) ? 1.0 : 0.0;
    if (record.converged) record.equilibrium = IsPureGse(game, a).is_gse;
  } else {
    PureGseEstimate estimate =
        EstimatePureGse(game, a, config.env_samples, rng, config.mixed_tolerance);
    record.satisfaction = std::move(estimate.satisfaction);
    if (record.converged) record.equilibrium = estimate.verdict.is_gse;
  }

  if (!record.converged && regret_based) {
    if (deterministic) {
      JointPmf pmf;
      const double w = 1.0 / static_cast<double>(tail.size());
      for (const auto& profile : tail) pmf.Add(profile, w);
      record.mixed = IsMixedGse(game, pmf, config.mixed_tolerance).is_gse;
    } else {
      const double len = static_cast<double>(T - half_start);
      record.mixed = std::all_of(tail_satisfied.begin(), tail_satisfied.end(), [&](long long c) {
        const double p = static_cast<double>(c) / len;
        return p <= config.mixed_tolerance || p >= 1.0 - config.mixed_tolerance;
      });
    }
    record.equilibrium = record.mixed;
  }
  record.prob_sat = Mean(record.satisfaction);
  return record;
}

const AlgorithmMetrics* MetricsTable::Find(std::string_view algorithm) const {
  for (const auto& row : rows) {
    if (row.algorithm == algorithm) return &row;
  }
  return nullptr;
}

AlgorithmMetrics AggregateAlgorithm(std::span<const RunRecord> records) {
  if (records.empty()) throw ArgumentError("cannot aggregate zero records");
  AlgorithmMetrics m;
  m.algorithm = records.front().algorithm;
  m.realizations = static_cast<int>(records.size());
  std::vector<double> times;
  int alloc_count = 0;
  for (const auto& r : records) {
    m.prob_equil += r.equilibrium;
    m.prob_sat += r.prob_sat;
    m.avg_utility += r.avg_utility;
    m.time_avg_utility += r.time_avg_utility;
    m.prob_converged += r.converged;
    if (!std::isnan(r.alloc_eff)) {
      m.alloc_eff += r.alloc_eff;
      ++alloc_count;
    }
    if (r.converged) times.push_back(r.convergence_time);
  }
  const double count = static_cast<double>(records.size());
  m.prob_equil /= count;
  m.prob_sat /= count;
  m.avg_utility /= count;
  m.time_avg_utility /= count;
  m.prob_converged /= count;
  m.alloc_eff = alloc_count == static_cast<int>(records.size()) ? m.alloc_eff / count : kNaN;
  if (!times.empty()) {
    std::sort(times.begin(), times.end());
    const std::size_t k = times.size();
    m.median_convergence_time = k % 2 ? times[k / 2] : 0.5 * (times[k / 2 - 1] + times[k / 2]);
  }
  return m;
}

MetricsTable Aggregate(std::span<const RunRecord> records) {
  if (records.empty()) throw ArgumentError("cannot aggregate zero records");
  std::vector<std::string> order;
  std::map<std::string, std::vector<RunRecord>> groups;
  for (const auto& r : records) {
    auto [it, inserted] = groups.try_emplace(r.algorithm);
    if (inserted) order.push_back(r.algorithm);
    it->second.push_back(r);
  }
  MetricsTable table;
  for (const auto& label : order) table.rows.push_back(AggregateAlgorithm(groups[label]));
  return table;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  ExperimentResult result;
  std::optional<GameDefinition> shared;
  {
    GameDefinition first = BuildExperimentGame(config, 0);
    for (const auto& learner : config.algorithms) learner.Validate(first);
    result.game_description = DescribeGame(first);
    if (!config.redraw_instance) shared = std::move(first);
  }

  const std::size_t R = static_cast<std::size_t>(config.realizations);
  const std::size_t jobs = config.algorithms.size() * R;
  result.records.resize(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs && !failed; job = next++) {
      try {
        const LearnerConfig& learner = config.algorithms[job / R];
        const int realization = static_cast<int>(job % R);
        if (shared) {
          result.records[job] = RunRealization(config, *shared, learner, realization);
        } else {
          result.records[job] = RunRealization(config, BuildExperimentGame(config, realization),
                                               learner, realization);
        }
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const int threads = ResolveThreads(config.threads, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  result.metrics = Aggregate(result.records);
  return result;
}

std::string DescribeConfig(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "name = " << config.name << '\n';
  out << "algorithms =";
  for (const auto& a : config.algorithms) out << ' ' << a.Label();
  out << '\n';
  out << "iterations = " << config.iterations << '\n'
      << "realizations = " << config.realizations << '\n'
      << "window = " << config.window << '\n'
      << "env_samples = " << config.env_samples << '\n'
      << "seed = " << config.seed << '\n'
      << "instance_index = " << config.instance_index << '\n'
      << "redraw_instance = " << (config.redraw_instance ? "true" : "false") << '\n'
      << "mixed_tolerance = " << Fmt(config.mixed_tolerance) << '\n';
  if (!config.algorithms.empty()) {
    const LearnerConfig& l = config.algorithms.front();
    out << "mu = " << (l.mu > 0 ? Fmt(l.mu) : std::string("auto")) << '\n'
        << "tremble = " << Fmt(l.tremble) << '\n'
        << "tremble_cutoff = "
        << (l.tremble_cutoff >= 0 ? std::to_string(l.tremble_cutoff)
                                  : std::to_string(l.ResolvedTrembleCutoff(config.iterations)))
        << '\n';
  }
  for (const auto& section : config.game.sections()) {
    for (const auto& e : section.entries) {
      out << section.name << '.' << e.key << " = " << e.value << '\n';
    }
  }
  return out.str();
}

void WriteRealizationsCsv(std::ostream& out, const ExperimentConfig& /*config*/,
                          const ExperimentResult& result) {
  out << "realization,algorithm,converged,equilibrium,prob_sat_final,avg_utility,alloc_eff,"
         "max_pos_regret\n";
  for (const auto& r : result.records) {
    out << r.realization << ',' << r.algorithm << ',' << (r.converged ? 1 : 0) << ','
        << (r.equilibrium ? 1 : 0) << ',' << Fmt(r.prob_sat) << ',' << Fmt(r.avg_utility) << ','
        << Fmt(r.alloc_eff) << ',' << Fmt(r.max_pos_regret) << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out, const ExperimentConfig& config,
                     const ExperimentResult& result) {
  std::istringstream lines(DescribeConfig(config));
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  out << "# game: " << result.game_description << '\n'
      << "# converged: the last " << config.window << " joint actions are identical\n"
      << "# prob_equil: fraction of realizations ending in a generalized satisfaction "
         "equilibrium; a converged profile is checked exactly (deterministic games) or over "
      << config.env_samples << " environment samples with tolerance " << Fmt(config.mixed_tolerance)
      << "; non-converged rm/rmrl runs are checked as a mixed equilibrium over the last "
      << config.iterations / 2 << " iterations\n"
      << "# prob_sat: mean over realizations of the mean per-player satisfaction probability "
         "at the final joint action\n"
      << "# avg_utility: mean fraction of players satisfied at the final iteration\n"
      << "# alloc_eff: units delivered / min(total capacity, total demand) at the final "
         "iteration; nan outside resource games\n";
  out << "algorithm,prob_equil,prob_sat,avg_utility,alloc_eff\n";
  for (const auto& m : result.metrics.rows) {
    out << m.algorithm << ',' << Fmt(m.prob_equil) << ',' << Fmt(m.prob_sat) << ','
        << Fmt(m.avg_utility) << ',' << Fmt(m.alloc_eff) << '\n';
  }
}

void WriteTrajectoryCsv(std::ostream& out, const ExperimentResult& result) {
  out << "realization,algorithm,iteration,satisfied\n";
  for (const auto& r : result.records) {
    for (std::size_t t = 0; t < r.trajectory.size(); ++t) {
      out << r.realization << ',' << r.algorithm << ',' << t << ',' << r.trajectory[t] << '\n';
    }
  }
}

void WriteExperimentOutputs(const std::filesystem::path& dir, const ExperimentConfig& config,
                            const ExperimentResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error(dir.string() + ": " + ec.message());
  auto write = [&](const std::string& file, auto&& fn) {
    const std::filesystem::path path = dir / file;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    fn(out);
    out.flush();
    if (!out) throw std::runtime_error(path.string() + ": write failed");
  };
  write("realizations.csv", [&](std::ostream& o) { WriteRealizationsCsv(o, config, result); });
  write("summary.csv", [&](std::ostream& o) { WriteSummaryCsv(o, config, result); });
  if (config.trajectory) {
    write("trajectory.csv", [&](std::ostream& o) { WriteTrajectoryCsv(o, result); });
  }
}

}  // namespace satgame
