// Copyright 2026 The efgsolve Authors
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


#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "efg/game_library.h"
#include "efg/harness.h"
#include "efg/strategy_io.h"
#include "gtest/gtest.h"

namespace efg {
namespace {

RunConfig Build(const std::string& text) {
  return BuildRunConfig(ParseConfigText(text));
}

TEST(ConfigTest, ParsesKeyValueLines) {
  const RunConfig c = Build(
      "# comment\n"
      "game = chance_dice\n"
      "algo=sampled-cfr\n"
      "iters = 250   # trailing\n"
      "seed = 9\n"
      "integer = true\n"
      "no-wall-clock = 1\n");
  EXPECT_EQ(c.game, "chance_dice");
  EXPECT_EQ(c.algorithm, Algorithm::kSampledCfr);
  EXPECT_EQ(c.iterations, 250);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_TRUE(c.integer);
  EXPECT_FALSE(c.wall_clock);
}

TEST(ConfigTest, RejectsBadValuesAndCombinations) {
  const char* bad[] = {
      "iters = 0",
      "iters = ten",
      "algo = cfr-plus",
      "bogus = 1",
      "eta = -1",
      "algo = cfr-rm\neta = 0.1",
      "algo = cfr-hedge\ninteger = true",
      "algo = sampled-cfr\nlearner = hedge\ninteger = true",
      "algo = sampled-cfr\nscheme = chance\ninteger = true",
      "algo = cfr-rm\nwarm-start = prior.txt",
      "algo = da\nt0 = 5",
      "algo = da\nalternating = true",
      "algo = cfr-rm\nbeta-schedule = constant",
      "algo = da\nbeta-schedule = cubic",
      "algo = cfr-rm\nscheme = chance",
      "algo = da\nlearner = rm",
      "recenter = maybe",
      "line without equals",
  };
  for (const char* text : bad) {
    EXPECT_THROW(Build(text), ConfigError) << text;
  }
  EXPECT_NO_THROW(Build("algo = cfr-hedge\neta = 0.25"));
  EXPECT_NO_THROW(Build("algo = cfr-br\neta = horizon"));
  EXPECT_NO_THROW(Build("algo = da\nbeta-schedule = hedge:0.5\nrecenter = true"));
}

TEST(CsvTest, HeaderAndRowFormat) {
  std::ostringstream out;
  ConvergenceRecord r;
  r.iteration = 7;
  r.nash_gap = 0.1;
  r.avg_regret = {0.25, 0.5};
  r.bound = {NAN, 1.0};
  r.wall_ms = 1.23456;
  WriteConvergenceCsv({r}, out);
  EXPECT_EQ(out.str(),
            "iteration,nash_gap,avg_regret_p1,avg_regret_p2,bound_p1,bound_p2,"
            "wall_ms\n"
            "7,0.10000000000000001,0.25,0.5,nan,1,1.235\n");
}

TEST(RunSolverTest, DeterministicForEveryAlgorithm) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("chance_dice"));
  for (const char* algo : {"cfr-rm", "cfr-hedge", "cfr-br", "da", "sampled-cfr"}) {
    RunConfig c = Build(std::string("algo = ") + algo +
                        "\niters = 300\nseed = 5\nno-wall-clock = true");
    std::ostringstream a, b;
    WriteConvergenceCsv(RunSolver(g, c).solver.records, a);
    WriteConvergenceCsv(RunSolver(g, c).solver.records, b);
    EXPECT_EQ(a.str(), b.str()) << algo;
  }
}

TEST(RunSolverTest, SeedsChangeSampledRuns) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  RunConfig c = Build("algo = sampled-cfr\niters = 300\nno-wall-clock = true");
  const RunOutput a = RunSolver(g, c);
  c.seed = 1;
  const RunOutput b = RunSolver(g, c);
  EXPECT_NE(a.x, b.x);
}

TEST(RunSolverTest, WarmStartFromStrategyFile) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  const RunOutput prior = RunSolver(g, Build("iters = 2000"));
  const std::string path =
      (std::filesystem::temp_directory_path() / "efg_prior.txt").string();
  StrategyProfile profile;
  profile.plans[kColumnPlayer] = prior.y;
  WriteStrategyFile(g, profile, path);
  const RunConfig c = Build("algo = da\nrecenter = true\niters = 10\nt0 = 100\n"
                            "log-stride = 1\nno-wall-clock = 1\nwarm-start = " +
                            path);
  const RunOutput warm = RunSolver(g, c);
  const RunOutput cold =
      RunSolver(g, Build("algo = da\nrecenter = true\niters = 10\nlog-stride = 1"));
  EXPECT_LT(warm.solver.records.back().nash_gap,
            cold.solver.records.back().nash_gap);
  std::remove(path.c_str());
}

TEST(CompareTest, MergesRunsWithACommonStride) {
  RunConfig a = Build("iters = 400\nno-wall-clock = true");
  RunConfig b = Build("algo = da\niters = 1000\nno-wall-clock = true");
  std::ostringstream out;
  CompareRuns({a, b}, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, std::string("algorithm,") + kCsvHeader);
  int rm = 0, da = 0;
  while (std::getline(in, line)) {
    if (line.rfind("cfr-rm,", 0) == 0) ++rm;
    if (line.rfind("da,", 0) == 0) ++da;
  }
  EXPECT_EQ(rm, 80);   // stride 5 over 400 iterations
  EXPECT_EQ(da, 200);  // stride 5 over 1000 iterations
}

TEST(CompareTest, RejectsMismatchedGamesAndSingleRuns) {
  std::ostringstream out;
  EXPECT_THROW(CompareRuns({Build("iters = 5")}, out), ConfigError);
  EXPECT_THROW(CompareRuns({Build("iters = 5"), Build("game = rps")}, out),
               ConfigError);
}

TEST(ChecksTest, AllBuiltinsPass) {
  for (const std::string& name : BuiltinGameNames()) {
    for (const CheckResult& r : RunChecks(name, 1)) {
      EXPECT_TRUE(r.pass) << name << ": " << r.name << ": " << r.detail;
    }
  }
}

}  // namespace
}  // namespace efg
