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
#include <random>
#include <vector>

#include "efg/cfr.h"
#include "efg/evaluation.h"
#include "efg/game_library.h"
#include "efg/oracles.h"
#include "efg/simplex_learners.h"
#include "gtest/gtest.h"

namespace efg {
namespace {

BehavioralStrategy RandomBehavioral(const Treeplex& t, std::mt19937_64& rng) {
  std::exponential_distribution<double> w(1.0);
  BehavioralStrategy b = UniformBehavioral(t);
  for (const InfosetSequences& info : t.infosets()) {
    double total = 0.0;
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      total += b.probs[s] = w(rng);
    }
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      b.probs[s] /= total;
    }
  }
  return b;
}

void ExpectFolk(const SolverResult& r) {
  for (const ConvergenceRecord& rec : r.records) {
    EXPECT_TRUE(
        FolkTheoremCheck(rec.average_gap, rec.avg_regret[0], rec.avg_regret[1])
            .pass)
        << "iteration " << rec.iteration;
  }
}

TEST(CounterfactualTest, MatchesTreeWalk) {
  for (const std::string& name : BuiltinGameNames()) {
    const GameTree tree = BuiltinGame(name);
    const SequenceFormGame g = BuildSequenceForm(tree);
    std::mt19937_64 rng(21);
    for (int k = 0; k < 20; ++k) {
      const BehavioralStrategy b[2] = {RandomBehavioral(g.treeplex(0), rng),
                                       RandomBehavioral(g.treeplex(1), rng)};
      for (int p = 0; p < kNumPlayers; ++p) {
        const SequenceVector walk =
            TreeCounterfactualUtilities(tree, g, p, b[p], b[1 - p]);
        const SequenceVector folded = CounterfactualUtilities(
            g, p, b[p], BehavioralToRealization(g.treeplex(1 - p), b[1 - p]));
        for (int s = 1; s < g.num_sequences(p); ++s) {
          EXPECT_NEAR(walk[s], folded[s], 1e-9) << name << " " << s;
        }
      }
    }
  }
}

TEST(CounterfactualTest, LeafInfosetsSeeTheRawGradient) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  const Treeplex& t = g.treeplex(0);
  const SequenceVector y = UniformPlan(g.treeplex(1));
  const SequenceVector grad = g.UtilityGradient(0, y);
  const SequenceVector cf = CounterfactualUtilities(g, 0, UniformBehavioral(t), y);
  for (int i = 0; i < t.num_infosets(); ++i) {
    if (!t.is_leaf_infoset(i)) continue;
    for (int s = t.infoset(i).first_sequence; s < t.infoset(i).end_sequence();
         ++s) {
      EXPECT_DOUBLE_EQ(cf[s], grad[s]);
    }
  }
}

TEST(CfrTest, HedgeCfrOnMatchingPenniesIsSimplexHedge) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("matching_pennies"));
  CfrOptions options;
  options.learner = {Learner::kHedge, RateSchedule::kConstant, 0.3};
  CfrSolver solver(g, options);
  CumulativeRegret simplex(2, g.payoff_bound());
  for (int t = 0; t < 200; ++t) {
    const std::vector<double> expected = HedgeNext(simplex, 0.3);
    solver.Iterate();
    const RealizationPlan& x = solver.current(0);
    EXPECT_NEAR(x[1], expected[0], 1e-12);
    EXPECT_NEAR(x[2], expected[1], 1e-12);
    const SequenceVector u = g.UtilityGradient(0, solver.current(1));
    simplex.RecordUtility(std::vector<double>{u[1], u[2]}, expected);
  }
}

TEST(CfrTest, HedgeCfrLeafInfosetsAreSimplexHedge) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  const Treeplex& t = g.treeplex(0);
  LearnerOptions hedge{Learner::kHedge, RateSchedule::kConstant, 0.2};
  RegretTable table(t, hedge, g.payoff_bound());
  SequenceVector sum(t.num_sequences(), 0.0);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const BehavioralStrategy policy = table.Policy();
    for (int i = 0; i < t.num_infosets(); ++i) {
      if (!t.is_leaf_infoset(i)) continue;
      const InfosetSequences& info = t.infoset(i);
      std::vector<double> expected(info.num_actions());
      HedgePolicy(std::span<const double>(sum).subspan(info.first_sequence,
                                                        info.num_actions()),
                  0.2, expected);
      for (int a = 0; a < info.num_actions(); ++a) {
        EXPECT_NEAR(policy.probs[info.first_sequence + a], expected[a], 1e-12);
      }
    }
    const RealizationPlan y =
        BehavioralToRealization(g.treeplex(1), RandomBehavioral(g.treeplex(1), rng));
    const SequenceVector grad = g.UtilityGradient(0, y);
    std::vector<double> values;
    table.Update(CounterfactualUtilities(t, grad, policy, &values), values);
    for (size_t s = 0; s < sum.size(); ++s) sum[s] += grad[s];
  }
}

TEST(CfrTest, CurrentPlansAreValid) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  for (Learner learner : {Learner::kRegretMatching, Learner::kHedge}) {
    CfrOptions options;
    options.learner.learner = learner;
    CfrSolver solver(g, options);
    for (int t = 0; t < 300; ++t) {
      solver.Iterate();
      EXPECT_TRUE(IsRealizationPlan(g.treeplex(0), solver.current(0)));
      EXPECT_TRUE(IsRealizationPlan(g.treeplex(1), solver.current(1)));
    }
    EXPECT_TRUE(IsRealizationPlan(g.treeplex(0), solver.Average(0)));
  }
}

TEST(CfrTest, FolkTheoremEveryLoggedIteration) {
  for (const std::string& name : BuiltinGameNames()) {
    const SequenceFormGame g = BuildSequenceForm(BuiltinGame(name));
    const LogOptions log{1, false};
    ExpectFolk(RunCfr(g, CfrOptions{}, 400, log));
    for (RateSchedule rate : {RateSchedule::kAnytime, RateSchedule::kFixedHorizon,
                              RateSchedule::kConstant}) {
      CfrOptions options;
      options.learner = {Learner::kHedge, rate, 0.5};
      ExpectFolk(RunCfr(g, options, 400, log));
    }
    ExpectFolk(RunCfrBr(g, CfrBrOptions{}, 400, log));
  }
}

TEST(CfrTest, RegretMatchingSolvesKuhn) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  const SolverResult r = RunCfr(g, CfrOptions{}, 3000, {0, false});
  EXPECT_LT(r.records.back().nash_gap, 0.02);
  EXPECT_NEAR(ExpectedValue(g, r.x_average, r.y_average), -1.0 / 18, 0.02);
  // Logged bounds dominate the logged regrets.
  for (const ConvergenceRecord& rec : r.records) {
    EXPECT_LE(rec.avg_regret[0], rec.bound[0]);
    EXPECT_LE(rec.avg_regret[1], rec.bound[1]);
  }
}

TEST(CfrTest, AlternatingUpdatesConverge) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  CfrOptions options;
  options.mode = UpdateMode::kAlternating;
  const SolverResult r = RunCfr(g, options, 3000, {0, false});
  EXPECT_LT(NashGap(g, r.x_average, r.y_average).gap, 0.02);
}

TEST(CfrBrTest, BestResponderHasZeroBoundAndGapShrinks) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  CfrBrOptions options;
  options.iterate = IterateChoice::kCurrent;
  const SolverResult r = RunCfrBr(g, options, 5000, {50, false});
  for (const ConvergenceRecord& rec : r.records) {
    EXPECT_EQ(rec.bound[1], 0.0);
    EXPECT_LE(rec.avg_regret[1], 1e-12);
  }
  EXPECT_LT(r.records.back().nash_gap, r.records[1].nash_gap);
}

TEST(LoggingTest, TenThousandIterationsGiveTwoHundredRows) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("matching_pennies"));
  const SolverResult r = RunCfr(g, CfrOptions{}, 10000, {0, false});
  ASSERT_EQ(r.records.size(), 200u);
  EXPECT_EQ(r.records.front().iteration, 50);
  EXPECT_EQ(r.records.back().iteration, 10000);
  EXPECT_EQ(RunCfr(g, CfrOptions{}, 7, {0, false}).records.size(), 7u);
  EXPECT_EQ(RunCfr(g, CfrOptions{}, 10, {4, false}).records.size(), 3u);
}

}  // namespace
}  // namespace efg
