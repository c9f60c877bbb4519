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

#ifndef SATGAME_HARNESS_H_
#define SATGAME_HARNESS_H_

// Monte Carlo experiments: R realizations of T iterations per algorithm,
// classified and aggregated into the Prob(Equil) / Prob(Sat) / Avg. Utility /
// Alloc. Eff. table.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "satgame/game.h"
#include "satgame/ini.h"
#include "satgame/learners.h"

namespace satgame {

struct ExperimentConfig {
  std::string name = "experiment";
  // Game description; only its [game] family sections are read.
  IniDocument game;
  std::vector<LearnerConfig> algorithms;
  int iterations = 25000;
  int realizations = 250;
  int window = 100;
  // Environment samples per satisfaction estimate (stochastic games).
  int env_samples = 200;
  std::uint64_t seed = 0;
  // Selects which random instance is drawn for a given seed.
  std::uint64_t instance_index = 0;
  // Draw a fresh random instance per realization.
  bool redraw_instance = false;
  // 0: SATGAME_THREADS, else hardware concurrency.
  int threads = 0;
  double mixed_tolerance = 0.05;
  bool trajectory = false;

  // Throws ConfigError.
  void Validate() const;
};

// [experiment] and [learner] sections configure the run; every other section
// describes the game.
ExperimentConfig ParseExperimentConfig(const IniDocument& doc);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

// Worker count actually used for `jobs` units of work.
int ResolveThreads(int requested, std::size_t jobs);

struct RunRecord {
  int realization = 0;
  std::string algorithm;
  bool converged = false;
  // Pure or mixed GSE classification of the final state.
  bool equilibrium = false;
  bool mixed = false;
  // First iteration of the final constant run, -1 if not converged.
  int convergence_time = -1;
  JointAction final_profile;
  // Per-player satisfaction probability at the final profile.
  std::vector<double> satisfaction;
  double prob_sat = 0.0;
  // Fraction satisfied at the final iteration, and averaged over all of them.
  double avg_utility = 0.0;
  double time_avg_utility = 0.0;
  int final_unsatisfied = 0;
  // NaN outside resource games.
  double alloc_eff = 0.0;
  // NaN for learners without regrets.
  double max_pos_regret = 0.0;
  // Satisfied players per iteration when trajectories are requested.
  std::vector<int> trajectory;
};

// Game used by `realization`: the shared instance, or a redraw.
GameDefinition BuildExperimentGame(const ExperimentConfig& config, int realization);

std::uint64_t RealizationSeed(const ExperimentConfig& config, const LearnerConfig& learner,
                              int realization);

RunRecord RunRealization(const ExperimentConfig& config, const GameDefinition& game,
                         const LearnerConfig& learner, int realization);

struct AlgorithmMetrics {
  std::string algorithm;
  int realizations = 0;
  double prob_equil = 0.0;
  double prob_sat = 0.0;
  double avg_utility = 0.0;
  double time_avg_utility = 0.0;
  double alloc_eff = 0.0;
  double prob_converged = 0.0;
  // Over converged runs; -1 if none converged.
  double median_convergence_time = -1.0;
};

struct MetricsTable {
  std::vector<AlgorithmMetrics> rows;

  const AlgorithmMetrics* Find(std::string_view algorithm) const;
};

// Records of one algorithm. Throws ArgumentError when empty.
AlgorithmMetrics AggregateAlgorithm(std::span<const RunRecord> records);
// Groups by algorithm in order of first appearance.
MetricsTable Aggregate(std::span<const RunRecord> records);

struct ExperimentResult {
  std::string game_description;
  std::vector<RunRecord> records;  // algorithm-major, then realization
  MetricsTable metrics;
};

ExperimentResult RunExperiment(const ExperimentConfig& config);

void WriteRealizationsCsv(std::ostream& out, const ExperimentConfig& config,
                          const ExperimentResult& result);
void WriteSummaryCsv(std::ostream& out, const ExperimentConfig& config,
                     const ExperimentResult& result);
void WriteTrajectoryCsv(std::ostream& out, const ExperimentResult& result);

// realizations.csv, summary.csv and (if requested) trajectory.csv under
// `dir`. Throws std::runtime_error naming the path on I/O failure.
void WriteExperimentOutputs(const std::filesystem::path& dir, const ExperimentConfig& config,
                            const ExperimentResult& result);

// The resolved configuration as comment-free key = value text.
std::string DescribeConfig(const ExperimentConfig& config);

}  // namespace satgame

#endif  // SATGAME_HARNESS_H_
