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

#include <benchmark/benchmark.h>

#include "satgame/games/rat_selection.h"
#include "satgame/games/resource_allocation.h"
#include "satgame/harness.h"
#include "satgame/learners.h"

namespace satgame {
namespace {

GameDefinition Resource20() {
  ResourceDraw draw;
  draw.average_capacity = {{5.4, 6.3}};
  draw.average_demand = {{3.3, 3.8}};
  return MakeResourceGame(MakeResourceInstance(draw, 1));
}

GameDefinition Rat100() {
  RatParams p;
  p.threshold = 2.2;
  return MakeRatGame(MakeRatInstance(p));
}

void BM_ResourceFillTable(benchmark::State& state) {
  const GameDefinition g = Resource20();
  Rng rng(1);
  MixedAction m = MixedAction::Uniform(g);
  SatisfactionTable table = g.MakeTable();
  JointAction a = m.Sample(rng);
  const EnvSample env = g.SampleEnv(rng);
  for (auto _ : state) {
    g.FillTable(a, env, table);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_ResourceFillTable);

void BM_RatFillTable(benchmark::State& state) {
  const GameDefinition g = Rat100();
  Rng rng(1);
  SatisfactionTable table = g.MakeTable();
  const JointAction a = MixedAction::Uniform(g).Sample(rng);
  for (auto _ : state) {
    g.FillTable(a, {}, table);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_RatFillTable);

// One full learner iteration: pmf, sample, environment, table, update.
void LearnerIteration(benchmark::State& state, const GameDefinition& g, const char* algo) {
  auto learner = MakeLearner(g, ParseAlgorithm(algo), 1 << 30);
  Rng rng(2);
  MixedAction m;
  JointAction a(std::vector<ActionId>(g.num_players(), 0));
  SatisfactionTable table = g.MakeTable();
  for (auto _ : state) {
    learner->NextMixedAction(rng, m);
    m.SampleInto(rng, a);
    const EnvSample env = g.SampleEnv(rng);
    g.FillTable(a, env, table);
    learner->Observe(a, table, m);
  }
}

void BM_ResourceRm(benchmark::State& state) { LearnerIteration(state, Resource20(), "rm"); }
void BM_ResourceRmrl(benchmark::State& state) { LearnerIteration(state, Resource20(), "rmrl"); }
void BM_ResourcePsel(benchmark::State& state) {
  LearnerIteration(state, Resource20(), "psel_reinforced");
}
void BM_RatRm(benchmark::State& state) { LearnerIteration(state, Rat100(), "rm"); }
void BM_RatRmrl(benchmark::State& state) { LearnerIteration(state, Rat100(), "rmrl"); }
BENCHMARK(BM_ResourceRm);
BENCHMARK(BM_ResourceRmrl);
BENCHMARK(BM_ResourcePsel);
BENCHMARK(BM_RatRm);
BENCHMARK(BM_RatRmrl);

// A whole short realization including the final classification.
void BM_RunRealization(benchmark::State& state) {
  ExperimentConfig c;
  c.game = IniDocument::Parse(
      "[game]\nfamily = resource\nagents = 20\nresources = 10\ninstance_seed = 1\n");
  c.algorithms = {ParseAlgorithm("rm")};
  c.iterations = static_cast<int>(state.range(0));
  c.realizations = 1;
  const GameDefinition g = BuildExperimentGame(c, 0);
  int r = 0;
  for (auto _ : state) benchmark::DoNotOptimize(RunRealization(c, g, c.algorithms[0], r++));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunRealization)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace satgame

BENCHMARK_MAIN();
