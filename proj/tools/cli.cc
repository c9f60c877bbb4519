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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satgame/equilibrium.h"
#include "satgame/errors.h"
#include "satgame/game_files.h"
#include "satgame/harness.h"
#include "satgame/ini.h"

namespace satgame::cli {
namespace {

namespace fs = std::filesystem;

constexpr int kFastIterations = 5000;

struct RunFlags {
  std::string config;
  std::string game;
  std::vector<std::string> algos;
  std::optional<int> iters;
  std::optional<int> realizations;
  std::optional<int> window;
  std::optional<int> env_samples;
  std::optional<int> sra_movers;
  std::optional<int> tremble_cutoff;
  std::optional<int> threads;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> instance_index;
  std::optional<double> mu;
  std::optional<double> tremble;
  std::string out;
  bool fast = false;
  bool trajectory = false;
};

void AddExperimentFlags(CLI::App* app, RunFlags& f) {
  app->add_option("--iters", f.iters, "Iterations T per realization")->check(CLI::PositiveNumber);
  app->add_option("--realizations", f.realizations, "Realizations R")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", f.seed, "Master seed");
  app->add_option("--window", f.window, "Convergence window W");
  app->add_option("--env-samples", f.env_samples, "Environment samples per estimate");
  app->add_option("--instance-index", f.instance_index, "Random instance selector");
  app->add_option("--threads", f.threads, "Worker threads (capped by SATGAME_THREADS)");
  app->add_option("--mu", f.mu, "Inertia constant (0 = 2 max |A_i|)");
  app->add_option("--tremble", f.tremble, "RMRL tremble level");
  app->add_option("--tremble-cutoff", f.tremble_cutoff, "Last trembling iteration (-1 = 0.6 T)");
  app->add_option("--sra-movers", f.sra_movers, "Maximum movers for every SRA entry")
      ->check(CLI::PositiveNumber);
  app->add_option("--out", f.out, "Output directory for CSV files");
  app->add_flag("--fast", f.fast, "Use T = 5000 unless --iters is given");
  app->add_flag("--trajectory", f.trajectory, "Also write per-iteration satisfied counts");
}

void AddRunFlags(CLI::App* app, RunFlags& f) {
  app->add_option("--config", f.config, "Experiment preset file");
  app->add_option("--game", f.game, "Game file (replaces the preset's game)");
  app->add_option("--algo", f.algos,
                  "Algorithms: psel_uniform psel_reinforced sra_<k> rm rmrl")
      ->delimiter(',');
  AddExperimentFlags(app, f);
}

void ApplyOverrides(const RunFlags& f, ExperimentConfig& config) {
  if (!f.algos.empty()) {
    config.algorithms.clear();
    for (const auto& label : f.algos) config.algorithms.push_back(ParseAlgorithm(label));
  }
  if (f.fast) config.iterations = kFastIterations;
  if (f.iters) config.iterations = *f.iters;
  if (f.realizations) config.realizations = *f.realizations;
  if (f.window) config.window = *f.window;
  if (f.env_samples) config.env_samples = *f.env_samples;
  if (f.seed) config.seed = *f.seed;
  if (f.instance_index) config.instance_index = *f.instance_index;
  if (f.threads) config.threads = *f.threads;
  if (f.trajectory) config.trajectory = true;
  for (auto& learner : config.algorithms) {
    if (f.mu) learner.mu = *f.mu;
    if (f.tremble) learner.tremble = *f.tremble;
    if (f.tremble_cutoff) learner.tremble_cutoff = *f.tremble_cutoff;
    if (f.sra_movers && learner.algorithm == Algorithm::kSra) {
      learner.sra_max_movers = *f.sra_movers;
    }
  }
}

ExperimentConfig ResolveRunConfig(const RunFlags& f) {
  if (f.config.empty() && f.game.empty()) throw ConfigError("give --config or --game");
  ExperimentConfig config;
  if (!f.config.empty()) {
    config = LoadExperimentConfig(f.config);
  } else {
    config.algorithms.push_back(ParseAlgorithm("rm"));
    config.name = fs::path(f.game).stem().string();
  }
  if (!f.game.empty()) config.game = IniDocument::Load(f.game);
  ApplyOverrides(f, config);
  config.Validate();
  return config;
}

void EmitResult(std::ostream& out, const ExperimentConfig& config, const ExperimentResult& result,
                const std::string& out_dir) {
  WriteSummaryCsv(out, config, result);
  if (!out_dir.empty()) {
    WriteExperimentOutputs(out_dir, config, result);
    out << "# wrote " << out_dir << '\n';
  }
}

// Extra per-algorithm columns used to read off the RAT regimes.
void WriteRegimes(std::ostream& out, const ExperimentResult& result) {
  out << "algorithm,prob_converged,median_convergence_time,prob_equil,"
         "mean_final_unsatisfied\n";
  for (const auto& m : result.metrics.rows) {
    double unsatisfied = 0.0;
    for (const auto& r : result.records) {
      if (r.algorithm == m.algorithm) unsatisfied += r.final_unsatisfied;
    }
    unsatisfied /= m.realizations;
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), "%s,%.6f,%.1f,%.6f,%.6f\n", m.algorithm.c_str(),
                  m.prob_converged, m.median_convergence_time, m.prob_equil, unsatisfied);
    out << buffer;
  }
}

std::string JoinProfiles(const std::vector<JointAction>& profiles) {
  std::string s = "{";
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    if (k) s += ", ";
    s += profiles[k].ToString();
  }
  return s + "}";
}

std::string JoinPlayers(const std::vector<PlayerId>& players) {
  std::string s = "{";
  for (std::size_t k = 0; k < players.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(players[k]);
  }
  return s + "}";
}

int Enumerate(const std::string& game_path, std::uint64_t cap, std::ostream& out) {
  const GameDefinition game = LoadGameFile(game_path);
  const PureEquilibria eq = EnumeratePureEquilibria(game, cap);
  out << "game: " << DescribeGame(game) << '\n';
  out << "SE: " << JoinProfiles(eq.satisfaction) << '\n';
  std::vector<JointAction> gse;
  for (const auto& [a, verdict] : eq.generalized) gse.push_back(a);
  out << "GSE: " << JoinProfiles(gse) << '\n';
  for (const auto& [a, verdict] : eq.generalized) {
    if (!verdict.unsatisfied_players.empty()) {
      out << "  " << a.ToString() << " unsatisfied=" << JoinPlayers(verdict.unsatisfied_players)
          << '\n';
    }
  }
  out << "NE: " << JoinProfiles(eq.nash) << '\n';
  for (PlayerId i = 0; i < game.num_players(); ++i) {
    out << "clipping[" << i << "]: " << JoinPlayers(FindClippingActions(game, i, cap)) << '\n';
  }
  return kExitOk;
}

int Verify(const std::string& game_path, const std::string& pmf_path, const std::string& check,
           double tol, std::ostream& out) {
  const GameDefinition game = LoadGameFile(game_path);
  const JointPmf pmf = LoadPmfFile(pmf_path, game);
  bool all = true;
  char buffer[64];
  if (check == "ce" || check == "all") {
    auto [ok, report] = IsCorrelatedEquilibrium(game, pmf, tol);
    std::snprintf(buffer, sizeof(buffer), "%.3g", report.max_positive_regret);
    out << "CE: " << (ok ? "true" : "false") << " (max positive regret " << buffer << ")\n";
    all = all && ok;
  }
  if (check == "he" || check == "all") {
    const bool ok = IsHannanEquilibrium(game, pmf, tol);
    out << "HE: " << (ok ? "true" : "false") << '\n';
    all = all && ok;
  }
  if (check == "gse" || check == "all") {
    const GseVerdict v = IsMixedGse(game, pmf, tol);
    out << "GSE: " << (v.is_gse ? "true" : "false")
        << " (satisfied=" << JoinPlayers(v.satisfied_players)
        << " unsatisfied=" << JoinPlayers(v.unsatisfied_players) << ")\n";
    all = all && v.is_gse;
  }
  return all ? kExitOk : kExitFalse;
}

fs::path PresetDir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SATGAME_PRESET_DIR")) return env;
  return SATGAME_DEFAULT_PRESET_DIR;
}

int Reproduce(const std::string& target, const RunFlags& f, const std::string& preset_flag,
              std::ostream& out) {
  const fs::path dir = PresetDir(preset_flag);
  std::vector<std::string> presets;
  if (target == "table1" || target == "table2") {
    presets = {target};
  } else {
    presets = {"rat_1_5", "rat_2_0", "rat_2_2", "rat_2_8"};
  }
  for (const auto& name : presets) {
    ExperimentConfig config = LoadExperimentConfig(dir / (name + ".ini"));
    ApplyOverrides(f, config);
    config.Validate();
    const ExperimentResult result = RunExperiment(config);
    const std::string sub = f.out.empty() ? "" : (fs::path(f.out) / name).string();
    EmitResult(out, config, result, sub);
    if (target == "rat") {
      WriteRegimes(out, result);
      if (!sub.empty()) {
        std::ofstream file(fs::path(sub) / "regimes.csv", std::ios::binary);
        if (!file) throw std::runtime_error(sub + "/regimes.csv: cannot open for writing");
        WriteRegimes(file, result);
      }
    }
  }
  return kExitOk;
}

// Sets `param` on the experiment, learner or [game] section.
void SetParam(ExperimentConfig& config, const std::string& param, const std::string& value) {
  auto as_int = [&] { return static_cast<int>(std::stol(value)); };
  if (param == "iterations") {
    config.iterations = as_int();
  } else if (param == "realizations") {
    config.realizations = as_int();
  } else if (param == "window") {
    config.window = as_int();
  } else if (param == "env_samples") {
    config.env_samples = as_int();
  } else if (param == "seed") {
    config.seed = std::stoull(value);
  } else if (param == "instance_index") {
    config.instance_index = std::stoull(value);
  } else if (param == "mixed_tolerance") {
    config.mixed_tolerance = std::stod(value);
  } else if (param == "mu" || param == "tremble" || param == "tremble_cutoff") {
    for (auto& l : config.algorithms) {
      if (param == "mu") l.mu = std::stod(value);
      if (param == "tremble") l.tremble = std::stod(value);
      if (param == "tremble_cutoff") l.tremble_cutoff = as_int();
    }
  } else {
    const std::string key = param.starts_with("game.") ? param.substr(5) : param;
    config.game.Set("game", key, value);
  }
}

int Sweep(const RunFlags& f, const std::string& param, const std::vector<std::string>& values,
          std::ostream& out) {
  const ExperimentConfig base = ResolveRunConfig(f);
  std::ostringstream table;
  table << "param,value,algorithm,prob_equil,prob_sat,avg_utility,alloc_eff\n";
  for (const auto& value : values) {
    ExperimentConfig config = base;
    try {
      SetParam(config, param, value);
    } catch (const std::logic_error&) {
      throw ConfigError("bad value '" + value + "' for " + param);
    }
    config.Validate();
    const ExperimentResult result = RunExperiment(config);
    const std::string sub =
        f.out.empty() ? "" : (fs::path(f.out) / (param + "_" + value)).string();
    EmitResult(out, config, result, sub);
    for (const auto& m : result.metrics.rows) {
      char buffer[200];
      std::snprintf(buffer, sizeof(buffer), ",%.6f,%.6f,%.6f,%.6f\n", m.prob_equil, m.prob_sat,
                    m.avg_utility, m.alloc_eff);
      table << param << ',' << value << ',' << m.algorithm << buffer;
    }
  }
  out << table.str();
  if (!f.out.empty()) {
    const fs::path path = fs::path(f.out) / "sweep.csv";
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error(path.string() + ": cannot open for writing");
    file << table.str();
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Satisfaction games: equilibrium checks and learning experiments", "satgame"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Run an experiment from a preset or game file");
  AddRunFlags(run, run_flags);

  RunFlags sweep_flags;
  std::string sweep_param;
  std::vector<std::string> sweep_values;
  CLI::App* sweep = app.add_subcommand("sweep", "Vary one parameter across runs");
  AddRunFlags(sweep, sweep_flags);
  sweep->add_option("--param", sweep_param, "Parameter: experiment/learner key or game key")
      ->required();
  sweep->add_option("--values", sweep_values, "Comma-separated values")
      ->required()
      ->delimiter(',');

  std::string enum_game;
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  CLI::App* enumerate = app.add_subcommand("enumerate", "List pure SE, GSE and NE of a game");
  enumerate->add_option("--game", enum_game, "Game file")->required();
  enumerate->add_option("--cap", enum_cap, "Maximum number of joint actions");

  std::string verify_game;
  std::string verify_pmf;
  std::string verify_check = "all";
  double verify_tol = kExactTolerance;
  CLI::App* verify = app.add_subcommand("verify", "Check a joint pmf for CE, HE and mixed GSE");
  verify->add_option("--game", verify_game, "Game file")->required();
  verify->add_option("--pmf", verify_pmf, "Pmf file")->required();
  verify->add_option("--check", verify_check, "ce, he, gse or all")
      ->check(CLI::IsMember({"ce", "he", "gse", "all"}));
  verify->add_option("--tol", verify_tol, "Tolerance")->check(CLI::NonNegativeNumber);

  RunFlags repro_flags;
  std::string repro_target;
  std::string preset_dir;
  CLI::App* reproduce = app.add_subcommand("reproduce", "Run the bundled presets");
  reproduce->add_option("target", repro_target, "table1, table2 or rat")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "rat"}));
  reproduce->add_option("--preset-dir", preset_dir, "Directory holding the preset files");
  AddExperimentFlags(reproduce, repro_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) {
      const ExperimentConfig config = ResolveRunConfig(run_flags);
      EmitResult(out, config, RunExperiment(config), run_flags.out);
      return kExitOk;
    }
    if (sweep->parsed()) return Sweep(sweep_flags, sweep_param, sweep_values, out);
    if (enumerate->parsed()) return Enumerate(enum_game, enum_cap, out);
    if (verify->parsed()) return Verify(verify_game, verify_pmf, verify_check, verify_tol, out);
    if (reproduce->parsed()) return Reproduce(repro_target, repro_flags, preset_dir, out);
  } catch (const std::exception& e) {
    err << "satgame: error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace satgame::cli
