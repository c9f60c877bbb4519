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

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "satgame/equilibrium.h"
#include "satgame/errors.h"
#include "satgame/game_files.h"
#include "satgame/games/rat_selection.h"
#include "satgame/games/resource_allocation.h"
#include "satgame/ini.h"

namespace satgame {
namespace {

const std::filesystem::path kFixtures = SATGAME_FIXTURE_DIR;

GameDefinition Build(std::string_view text) { return BuildGame(IniDocument::Parse(text, "t.game")); }

// Line number carried by the ParseError thrown from `fn`, or -1.
template <typename Fn>
int FailLine(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Ini, BasicSyntax) {
  const IniDocument doc = IniDocument::Parse(
      "# comment\n[a]\nx = 1\n; other comment\ny = two words \n[b]\nz=true\n");
  EXPECT_EQ(doc.GetInt("a", "x"), 1);
  EXPECT_EQ(doc.GetString("a", "y"), "two words");
  EXPECT_TRUE(doc.GetBool("b", "z"));
  EXPECT_EQ(doc.GetInt("b", "w", 5), 5);
  EXPECT_EQ(doc.RequireSection("b").line, 6);
  EXPECT_EQ(doc.Without({"a"}).sections().size(), 1u);
}

TEST(Ini, ErrorsCarryLines) {
  EXPECT_EQ(FailLine([] { IniDocument::Parse("[a]\nx = 1\n[a\n"); }), 3);
  EXPECT_EQ(FailLine([] { IniDocument::Parse("x = 1\n"); }), 1);
  EXPECT_EQ(FailLine([] { IniDocument::Parse("[a]\nx = 1\nx = 2\n"); }), 3);
  EXPECT_EQ(FailLine([] { IniDocument::Parse("[a]\n\nnot a pair\n"); }), 3);
  EXPECT_EQ(FailLine([] { IniDocument::Parse("[a]\n[a]\n"); }), 2);
  const IniDocument doc = IniDocument::Parse("[a]\nx = 1\ny = abc\nz = 1 2 q\n");
  EXPECT_EQ(FailLine([&] { doc.GetDouble("a", "y"); }), 3);
  EXPECT_EQ(FailLine([&] { doc.GetDoubles("a", "z"); }), 4);
  EXPECT_EQ(FailLine([&] { doc.GetInt("a", "missing"); }), 1);
  EXPECT_EQ(FailLine([&] { doc.CheckKeys("a", {"x", "y"}); }), 4);
}

TEST(Ini, MessageNamesSourceAndLine) {
  try {
    IniDocument::Parse("[a]\nbad\n", "conf.ini");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("conf.ini:2: ", 0), 0u) << e.what();
  }
}

TEST(Ini, SplitList) {
  EXPECT_EQ(SplitList("a, b  c,,d"), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_TRUE(SplitList("  ").empty());
}

TEST(GameFiles, TableFixtures) {
  const GameDefinition matching = LoadGameFile(kFixtures / "matching.game");
  EXPECT_EQ(EnumeratePureEquilibria(matching).satisfaction,
            (std::vector<JointAction>{{0, 0}, {1, 1}}));
  EXPECT_TRUE(EnumeratePureEquilibria(LoadGameFile(kFixtures / "mismatch.game")).generalized.empty());
  const GameDefinition never = LoadGameFile(kFixtures / "never_satisfiable.game");
  EXPECT_TRUE(EnumeratePureEquilibria(never).satisfaction.empty());
  EXPECT_EQ(FindClippingActions(LoadGameFile(kFixtures / "universal_clipping.game"), 0),
            (std::vector<ActionId>{0, 1}));
}

TEST(GameFiles, EmptySatisfyingSetDash) {
  const GameDefinition g = Build(
      "[game]\nfamily = table\nactions = 2 3\n[player.0]\n0 = -\n1 = -\n2 = 0 1\n"
      "[player.1]\n0 = 2\n1 = -\n");
  EXPECT_TRUE(SatisfyingSet(g, 0, std::vector<ActionId>{0}).empty());
  EXPECT_EQ(SatisfyingSet(g, 0, std::vector<ActionId>{2}), (std::vector<ActionId>{0, 1}));
  EXPECT_EQ(SatisfyingSet(g, 1, std::vector<ActionId>{0}), (std::vector<ActionId>{2}));
}

TEST(GameFiles, TableErrors) {
  const char* bad_action =
      "[game]\nfamily = table\nactions = 2 2\n[player.0]\n0 = 0\n1 = 5\n";
  EXPECT_EQ(FailLine([&] { Build(bad_action); }), 6);
  const char* bad_opponent = "[game]\nfamily = table\nactions = 2 2\n[player.1]\n7 = 0\n";
  EXPECT_EQ(FailLine([&] { Build(bad_opponent); }), 5);
  const char* bad_player = "[game]\nfamily = table\nactions = 2 2\n[player.4]\n0 = 0\n";
  EXPECT_EQ(FailLine([&] { Build(bad_player); }), 4);
  const char* bad_key = "[game]\nfamily = table\nactons = 2 2\n";
  EXPECT_EQ(FailLine([&] { Build(bad_key); }), 3);
  const char* bad_family = "[game]\nname = x\nfamily = chess\n";
  EXPECT_EQ(FailLine([&] { Build(bad_family); }), 3);
}

TEST(GameFiles, ResourceExplicit) {
  const GameDefinition g = LoadGameFile(kFixtures / "resource_small.game");
  const ResourceInstance* inst = AsResourceInstance(g);
  ASSERT_NE(inst, nullptr);
  EXPECT_EQ(inst->demands, (std::vector<double>{3, 3, 2}));
  EXPECT_EQ(inst->capacities, (std::vector<double>{5, 4}));
  EXPECT_FALSE(g.is_deterministic());
}

TEST(GameFiles, ResourceRandom) {
  const char* text =
      "[game]\nfamily = resource\nagents = 6\nresources = 3\naverage_demand = 2 4\n";
  EXPECT_THROW(Build(text), ParseError);  // no seed anywhere
  const IniDocument doc = IniDocument::Parse(text);
  const GameDefinition a = BuildGame(doc, 9);
  const GameDefinition b = BuildGame(doc, 9);
  EXPECT_EQ(AsResourceInstance(a)->demands, AsResourceInstance(b)->demands);
  EXPECT_EQ(a.num_players(), 6);
  EXPECT_EQ(a.num_actions(0), 3);
  const char* bad_service = "[game]\nfamily = resource\ndemands = 1 2\ncapacities = 3\nservice = some\n";
  EXPECT_EQ(FailLine([&] { Build(bad_service); }), 5);
  const char* bad_range = "[game]\nfamily = resource\ninstance_seed = 1\ndemand_range = 5 1\n";
  EXPECT_EQ(FailLine([&] { Build(bad_range); }), 4);
}

TEST(GameFiles, Rat) {
  const GameDefinition g = LoadGameFile(kFixtures / "rat_small.game");
  ASSERT_NE(AsRatInstance(g), nullptr);
  const GameDefinition custom =
      Build("[game]\nfamily = rat\nusers = 4\nthreshold = 2\ncapacities = 6 4\nkinds = wifi lte\n");
  const RatInstance* inst = AsRatInstance(custom);
  ASSERT_NE(inst, nullptr);
  EXPECT_EQ(inst->kinds[0], StationKind::kWifi);
  EXPECT_EQ(inst->kinds[1], StationKind::kLte);
  EXPECT_EQ(custom.num_players(), 4);
  EXPECT_EQ(FailLine([] {
              Build("[game]\nfamily = rat\nthreshold = 2\ncapacities = 6 4\nkinds = wifi 5g\n");
            }),
            5);
}

TEST(GameFiles, Dating) {
  const GameDefinition g = LoadGameFile(kFixtures / "dating.game");
  EXPECT_EQ(g.num_players(), 4);
  EXPECT_TRUE(IsPureSe(g, {0, 1, 0, 1}));
  EXPECT_EQ(FailLine([] { Build("[game]\nfamily = dating\nn = 2\n[alpha]\n0 = 3\n"); }), 5);
  EXPECT_EQ(FailLine([] { Build("[game]\nfamily = dating\nn = 2\n[gamma]\n0 = 1\n"); }), 4);
}

TEST(GameFiles, Pmf) {
  const GameDefinition g = LoadGameFile(kFixtures / "matching.game");
  const JointPmf pmf = LoadPmfFile(kFixtures / "mix.pmf", g);
  EXPECT_DOUBLE_EQ(pmf.Probability({0, 0}), 0.5);
  EXPECT_DOUBLE_EQ(pmf.Probability({1, 1}), 0.5);
  auto parse = [&](const char* text) { ParsePmf(IniDocument::Parse(text), g); };
  EXPECT_EQ(FailLine([&] { parse("[pmf]\n0 0 = 0.5\n0 2 = 0.5\n"); }), 3);
  EXPECT_EQ(FailLine([&] { parse("[pmf]\n0 0 = 0.5\n1 1 = -0.5\n"); }), 3);
  EXPECT_EQ(FailLine([&] { parse("[pmf]\n0 0 = 0.5\n1 1 = 0.4\n"); }), 1);
}

TEST(GameFiles, MissingFile) {
  EXPECT_THROW(LoadGameFile(kFixtures / "does_not_exist.game"), ParseError);
}

TEST(GameFiles, Describe) {
  EXPECT_EQ(DescribeGame(LoadGameFile(kFixtures / "matching.game")), "matching players=2 actions=2:2");
  const std::string r = DescribeGame(LoadGameFile(kFixtures / "resource_small.game"));
  EXPECT_NE(r.find("avg_capacity=4.5000"), std::string::npos) << r;
}

}  // namespace
}  // namespace satgame
