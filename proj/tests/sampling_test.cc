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
#include <functional>
#include <random>
#include <vector>

#include "efg/errors.h"
#include "efg/game_library.h"
#include "efg/sampling.h"
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

// Calls fn(actions, probability) for every assignment of one action per
// information set, with probability the product of the behavioral weights.
void ForEachPureStrategy(
    const Treeplex& t, const BehavioralStrategy& b,
    const std::function<void(const std::vector<int>&, double)>& fn) {
  std::vector<int> actions(t.num_infosets(), 0);
  std::function<void(int, double)> rec = [&](int i, double prob) {
    if (i == t.num_infosets()) {
      fn(actions, prob);
      return;
    }
    for (int a = 0; a < t.infoset(i).num_actions(); ++a) {
      actions[i] = a;
      rec(i + 1, prob * b.probs[t.infoset(i).first_sequence + a]);
    }
  };
  rec(0, 1.0);
}

TEST(SamplingTest, OutcomeEstimatorIsExactlyUnbiased) {
  for (const char* name : {"kuhn", "chance_dice", "rps"}) {
    const SequenceFormGame g = BuildSequenceForm(BuiltinGame(name));
    std::mt19937_64 rng(1);
    const int components = static_cast<int>(g.chance_components().size());
    for (int p = 0; p < kNumPlayers; ++p) {
      const Treeplex& opp = g.treeplex(1 - p);
      const BehavioralStrategy b = RandomBehavioral(opp, rng);
      const SequenceVector exact =
          g.UtilityGradient(p, BehavioralToRealization(opp, b));
      SequenceVector mean(g.num_sequences(p), 0.0);
      ForEachPureStrategy(opp, b, [&](const std::vector<int>& a, double prob) {
        const PureStrategy pure = MakePureStrategy(opp, a);
        for (int i = 0; i < components; ++i) {
          const ChanceDraw c = ChanceComponentScale(g, i);
          const SequenceVector u = SampledUtility(g, p, pure.sequences, &c);
          for (size_t s = 0; s < mean.size(); ++s) {
            mean[s] += prob * u[s] / components;
          }
        }
      });
      for (size_t s = 0; s < mean.size(); ++s) {
        EXPECT_NEAR(mean[s], exact[s], 1e-12) << name << " p" << p;
      }
    }
  }
}

TEST(SamplingTest, MonteCarloMeansWithinThreeSigma) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  std::mt19937_64 rng(2);
  SamplerStreams streams(2);
  const Treeplex& opp = g.treeplex(1);
  const RealizationPlan y =
      BehavioralToRealization(opp, RandomBehavioral(opp, rng));
  const SequenceVector exact = g.UtilityGradient(0, y);
  const int n = g.num_sequences(0);
  const int draws = 50000;
  std::vector<double> sum(n, 0.0), sq(n, 0.0);
  for (int k = 0; k < draws; ++k) {
    const PureStrategy pure = SampleOpponent(opp, y, 1, streams);
    EXPECT_TRUE(IsRealizationPlan(opp, pure.plan));
    const ChanceDraw c = SampleChanceComponent(g, streams);
    const SequenceVector u = SampledUtility(g, 0, pure.sequences, &c);
    for (int s = 0; s < n; ++s) {
      sum[s] += u[s];
      sq[s] += u[s] * u[s];
    }
  }
  for (int s = 0; s < n; ++s) {
    const double mean = sum[s] / draws;
    const double sd = std::sqrt(std::max(0.0, sq[s] / draws - mean * mean));
    EXPECT_LE(std::abs(mean - exact[s]), 3.0 * sd / std::sqrt(draws) + 1e-12);
  }
}

TEST(SamplingTest, ComponentsAverageToThePayoffMatrix) {
  for (const char* name : {"kuhn", "chance_dice"}) {
    const SequenceFormGame g = BuildSequenceForm(BuiltinGame(name));
    const RealizationPlan y = UniformPlan(g.treeplex(1));
    const SequenceVector exact = g.UtilityGradient(0, y);
    SequenceVector mix(exact.size(), 0.0);
    const int p = static_cast<int>(g.chance_components().size());
    for (int i = 0; i < p; ++i) {
      const SequenceVector u =
          ComponentUtility(g, 0, y, ChanceComponentScale(g, i));
      for (size_t s = 0; s < mix.size(); ++s) mix[s] += u[s] / p;
    }
    for (size_t s = 0; s < mix.size(); ++s) EXPECT_NEAR(mix[s], exact[s], 1e-12);
  }
}

TEST(DrawTest, FloatAndIntegerAgreeOnIntegerWeights) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int64_t> w(0, 1000);
  for (int k = 0; k < 10000; ++k) {
    std::vector<int64_t> counts(1 + k % 5);
    for (int64_t& c : counts) c = w(rng);
    std::vector<double> weights(counts.begin(), counts.end());
    const uint32_t key = DrawKey(rng);
    EXPECT_EQ(DrawFromWeights(weights, key), DrawFromCounts(counts, key));
  }
  EXPECT_EQ(DrawFromWeights(std::vector<double>{0, 0, 0, 0}, 0x80000000u), 2);
  EXPECT_EQ(DrawFromWeights(std::vector<double>{0, 1, 0}, 0u), 1);
}

TEST(StreamsTest, IndependentPerInformationSet) {
  SamplerStreams a(42), b(42);
  const uint64_t first = a.Stream(1, 0, 5)();
  for (int k = 0; k < 10; ++k) b.Stream(1, 0, 3)();
  EXPECT_EQ(b.Stream(1, 0, 5)(), first);
  SamplerStreams c(43);
  EXPECT_NE(c.Stream(1, 0, 5)(), first);
}

TEST(SampledCfrTest, RejectsInvalidIntegerConfigurations) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  SampledCfrOptions options;
  options.arithmetic = Arithmetic::kInteger;
  EXPECT_NO_THROW(ValidateSampledCfrOptions(g, options));
  options.learner.learner = Learner::kHedge;
  EXPECT_THROW(ValidateSampledCfrOptions(g, options), InvalidArgument);
  options.learner.learner = Learner::kRegretMatching;
  options.scheme = SamplingScheme::kChance;
  EXPECT_THROW(ValidateSampledCfrOptions(g, options), InvalidArgument);
  const SequenceFormGame frac = BuildSequenceForm(LoadGame(
      "efg 1\nnode r p1 i a=x b=y\nnode x terminal 0.5\nnode y terminal 0\n"));
  options.scheme = SamplingScheme::kOutcome;
  EXPECT_THROW(ValidateSampledCfrOptions(frac, options), InvalidArgument);
}

TEST(SampledCfrTest, IntegerModeIsExactAndMatchesFloatChoices) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  for (uint64_t seed = 0; seed < 5; ++seed) {
    SampledCfrOptions integer;
    integer.seed = seed;
    integer.arithmetic = Arithmetic::kInteger;
    SampledCfrOptions floating = integer;
    floating.arithmetic = Arithmetic::kFloat;
    floating.continuation = Continuation::kSampled;
    const SampledCfrResult a = RunSampledCfr(g, integer, 2000, {100, false});
    const SampledCfrResult b = RunSampledCfr(g, floating, 2000, {100, false});
    for (int p = 0; p < kNumPlayers; ++p) {
      ASSERT_FALSE(a.integer_regrets[p].empty());
      for (size_t s = 0; s < a.integer_regrets[p].size(); ++s) {
        EXPECT_EQ(static_cast<double>(a.integer_regrets[p][s]),
                  b.regrets[p][s]);
      }
      EXPECT_EQ(a.sampled_regret[p], b.sampled_regret[p]);
    }
    int64_t total = 0;
    for (size_t s = 1; s < 3; ++s) total += a.counts[0][s];
    EXPECT_EQ(total, 2000);
  }
}

TEST(SampledCfrTest, BothSchemesConvergeOnKuhn) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  for (SamplingScheme scheme : {SamplingScheme::kOutcome, SamplingScheme::kChance}) {
    SampledCfrOptions options;
    options.scheme = scheme;
    const SampledCfrResult r = RunSampledCfr(g, options, 20000, {0, false});
    EXPECT_LT(r.solver.records.back().nash_gap, 0.1);
    EXPECT_LT(r.solver.records.back().nash_gap, r.solver.records.front().nash_gap);
  }
}

TEST(SampledCfrTest, RegretBoundFormula) {
  const Treeplex t = Treeplex::Simplex(4);
  const double c = std::pow(2.0 * std::sqrt(4.0), 2);
  EXPECT_NEAR(SampledRegretBound(t, 2.0, 100, 0.05),
              std::sqrt(c * 100) +
                  2 * 2.0 * std::sqrt(50.0 * std::log(1 / 0.05)),
              1e-9);
}

}  // namespace
}  // namespace efg
