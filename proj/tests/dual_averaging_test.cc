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
#include "efg/dual_averaging.h"
#include "efg/errors.h"
#include "efg/evaluation.h"
#include "efg/game_library.h"
#include "gtest/gtest.h"

namespace efg {
namespace {

RealizationPlan RandomPlan(const Treeplex& t, std::mt19937_64& rng) {
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
  return BehavioralToRealization(t, b);
}

TEST(StepScheduleTest, Values) {
  EXPECT_DOUBLE_EQ((StepSchedule{StepKind::kConstant, 2.0}).Beta(9, 1.0), 2.0);
  EXPECT_DOUBLE_EQ((StepSchedule{StepKind::kInverseSqrt, 0.0}).Beta(4, 3.0), 1.5);
  EXPECT_DOUBLE_EQ((StepSchedule{StepKind::kInverseSqrt, 1.0}).Beta(4, 3.0), 0.5);
  EXPECT_DOUBLE_EQ((StepSchedule{StepKind::kHedge, 0.0, 0.5}).Beta(4, 1.0), 0.5);
}

TEST(DualAveragingTest, IteratesAreValidPlans) {
  for (const std::string& name : BuiltinGameNames()) {
    const SequenceFormGame g = BuildSequenceForm(BuiltinGame(name));
    for (bool recenter : {false, true}) {
      DualAveragingSolver solver(g, StepSchedule{}, recenter);
      for (int t = 0; t < 200; ++t) {
        solver.Step();
        EXPECT_TRUE(IsRealizationPlan(g.treeplex(0), solver.current(0)));
        EXPECT_TRUE(IsRealizationPlan(g.treeplex(1), solver.current(1)));
      }
    }
  }
}

TEST(DualAveragingTest, RecenteredStartIsUniform) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  const DualAveragingSolver solver(g, StepSchedule{}, true);
  const RealizationPlan uniform = UniformPlan(g.treeplex(0));
  for (int s = 0; s < g.num_sequences(0); ++s) {
    EXPECT_NEAR(solver.current(0)[s], uniform[s], 1e-12);
  }
}

TEST(DualAveragingTest, LazyAtLeafInfosetsOnly) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  const Treeplex& t = g.treeplex(0);
  const double eta = 0.5;
  RegretTable table(t, {Learner::kHedge, RateSchedule::kConstant, eta},
                    g.payoff_bound());
  DualState da(DilatedDGF(t), StepSchedule{StepKind::kHedge, 0.0, eta},
               g.payoff_bound());
  std::mt19937_64 rng(12);
  double leaf = 0.0, interior = 0.0;
  for (int k = 0; k < 200; ++k) {
    const BehavioralStrategy policy = table.Policy();
    const BehavioralStrategy lazy = RealizationToBehavioral(t, da.NextIterate());
    for (int i = 0; i < t.num_infosets(); ++i) {
      for (int s = t.infoset(i).first_sequence; s < t.infoset(i).end_sequence();
           ++s) {
        double& d = t.is_leaf_infoset(i) ? leaf : interior;
        d = std::max(d, std::abs(policy.probs[s] - lazy.probs[s]));
      }
    }
    const SequenceVector grad =
        g.UtilityGradient(0, RandomPlan(g.treeplex(1), rng));
    std::vector<double> values;
    table.Update(CounterfactualUtilities(t, grad, policy, &values), values);
    SequenceVector loss = grad;
    for (double& v : loss) v = -v;
    da.AddGradient(loss);
  }
  EXPECT_LE(leaf, 1e-12);
  RecordProperty("interior_max_difference", std::to_string(interior));
  EXPECT_GT(interior, 0.0);
}

TEST(DualAveragingTest, RegretMatchingEquivalence) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 50; ++k) {
    std::vector<std::vector<double>> stream(300, std::vector<double>(2 + k % 4));
    for (auto& row : stream) {
      for (double& v : row) v = u(rng);
    }
    EXPECT_LE(RmDaEquivalenceCheck(stream), 1e-12);
    EXPECT_LE(HedgeDaEquivalenceCheck(stream, 0.1), 1e-9);
  }
}

TEST(DualAveragingTest, FolkTheoremForSelfPlayAverages) {
  for (const std::string& name : BuiltinGameNames()) {
    const SequenceFormGame g = BuildSequenceForm(BuiltinGame(name));
    for (StepKind kind :
         {StepKind::kConstant, StepKind::kInverseSqrt, StepKind::kHedge}) {
      DaOptions options;
      options.schedule.kind = kind;
      options.recenter_uniform = kind == StepKind::kConstant;
      const SolverResult r = RunDualAveraging(g, options, 300, {1, false});
      for (const ConvergenceRecord& rec : r.records) {
        EXPECT_TRUE(FolkTheoremCheck(rec.average_gap, rec.avg_regret[0],
                                     rec.avg_regret[1])
                        .pass);
        EXPECT_TRUE(std::isnan(rec.bound[0]));
      }
    }
  }
}

TEST(DualAveragingTest, ConvergesOnKuhn) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  const SolverResult r = RunDualAveraging(g, DaOptions{}, 3000, {0, false});
  EXPECT_LT(r.records.back().nash_gap, r.records.front().nash_gap);
  DaOptions sharp;
  sharp.schedule.scale = 0.1;
  EXPECT_LT(RunDualAveraging(g, sharp, 3000, {0, false}).records.back().nash_gap,
            0.01);
}

TEST(WarmStartTest, SetsTheDualStateAndRejectsLateCalls) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  DualAveragingSolver solver(g, StepSchedule{}, true);
  const RealizationPlan y = UniformPlan(g.treeplex(1));
  solver.WarmStart(std::nullopt, y, 100);
  EXPECT_EQ(solver.state(0).t(), 100);
  EXPECT_EQ(solver.state(1).t(), 0);
  const SequenceVector grad = g.UtilityGradient(0, y);
  for (int s = 0; s < g.num_sequences(0); ++s) {
    EXPECT_NEAR(solver.state(0).gradient_sum()[s], -100.0 * grad[s], 1e-12);
  }
  solver.Step();
  EXPECT_EQ(solver.iterations(), 1);
  EXPECT_THROW(solver.WarmStart(std::nullopt, y, 10), InvalidArgument);
}

TEST(WarmStartTest, RejectsInvalidPriors) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  DualAveragingSolver solver(g, StepSchedule{}, false);
  RealizationPlan bad(g.num_sequences(1), 0.3);
  EXPECT_THROW(solver.WarmStart(std::nullopt, bad, 5), InvalidArgument);
}

}  // namespace
}  // namespace efg
