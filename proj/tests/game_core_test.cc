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


#include <map>
#include <random>
#include <string>
#include <utility>

#include "efg/errors.h"
#include "efg/game_library.h"
#include "efg/game_tree.h"
#include "efg/oracles.h"
#include "efg/sequence_form.h"
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

// Payoff entries keyed by sequence names, so that two numberings compare.
std::map<std::pair<std::string, std::string>, double> NamedEntries(
    const SequenceFormGame& g) {
  std::map<std::pair<std::string, std::string>, double> out;
  for (const PayoffEntry& e : g.payoff().entries()) {
    out[{g.treeplex(0).sequence_name(e.row),
         g.treeplex(1).sequence_name(e.col)}] += e.value;
  }
  return out;
}

TEST(SequenceFormTest, MatchingPenniesShape) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("matching_pennies"));
  EXPECT_EQ(g.num_sequences(kRowPlayer), 3);
  EXPECT_EQ(g.num_sequences(kColumnPlayer), 3);
  EXPECT_EQ(g.payoff().entries().size(), 4u);
  EXPECT_DOUBLE_EQ(g.payoff_bound(), 1.0);
  const RealizationPlan half = {1.0, 0.5, 0.5};
  EXPECT_NEAR(ExpectedValue(g, half, half), 0.0, 1e-15);
}

TEST(SequenceFormTest, KuhnShape) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  EXPECT_EQ(g.treeplex(kRowPlayer).num_infosets(), 6);
  EXPECT_EQ(g.treeplex(kColumnPlayer).num_infosets(), 6);
  EXPECT_EQ(g.num_sequences(kRowPlayer), 13);
  EXPECT_EQ(g.num_sequences(kColumnPlayer), 13);
  EXPECT_EQ(g.chance_components().size(), 6u);
  EXPECT_TRUE(g.uniform_root_chance());
  EXPECT_DOUBLE_EQ(g.payoff_bound(), 2.0);
}

TEST(SequenceFormTest, ExpectedValueMatchesTreeWalk) {
  for (const std::string& name : BuiltinGameNames()) {
    const GameTree tree = BuiltinGame(name);
    const SequenceFormGame g = BuildSequenceForm(tree);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
      const BehavioralStrategy b1 = RandomBehavioral(g.treeplex(0), rng);
      const BehavioralStrategy b2 = RandomBehavioral(g.treeplex(1), rng);
      const RealizationPlan x = BehavioralToRealization(g.treeplex(0), b1);
      const RealizationPlan y = BehavioralToRealization(g.treeplex(1), b2);
      EXPECT_TRUE(IsRealizationPlan(g.treeplex(0), x));
      EXPECT_TRUE(IsRealizationPlan(g.treeplex(1), y));
      EXPECT_NEAR(ExpectedValue(g, x, y), TreeExpectedValue(tree, g, b1, b2),
                  1e-9)
          << name;
    }
  }
}

TEST(SequenceFormTest, PayoffInvariantToHistoryOrder) {
  // Kuhn with the deals listed in reverse order.
  const GameTree kuhn = BuiltinGame("kuhn");
  GameTreeBuilder b;
  std::vector<int> ids(kuhn.num_nodes(), -1);
  for (int id : kuhn.preorder()) {
    const Node& n = kuhn.node(id);
    switch (n.kind) {
      case NodeKind::kDecision:
        ids[id] = b.AddDecision(n.player, n.infoset_label, n.actions);
        break;
      case NodeKind::kChance: {
        std::vector<std::string> actions(n.actions.rbegin(), n.actions.rend());
        std::vector<double> probs(n.chance_probs.rbegin(),
                                  n.chance_probs.rend());
        ids[id] = b.AddChance(actions, probs);
        break;
      }
      case NodeKind::kTerminal:
        ids[id] = b.AddTerminal(n.utility);
        break;
    }
  }
  for (int id : kuhn.preorder()) {
    const Node& n = kuhn.node(id);
    const int k = static_cast<int>(n.children.size());
    for (int a = 0; a < k; ++a) {
      const int slot = n.kind == NodeKind::kChance ? k - 1 - a : a;
      b.Connect(ids[id], slot, ids[n.children[a]]);
    }
  }
  const GameTree reversed = std::move(b).Build(ids[kuhn.root()]);
  const SequenceFormGame g1 = BuildSequenceForm(kuhn);
  const SequenceFormGame g2 = BuildSequenceForm(reversed);
  EXPECT_NE(g1.treeplex(0).sequence_name(1), g2.treeplex(0).sequence_name(1));
  const auto e1 = NamedEntries(g1);
  const auto e2 = NamedEntries(g2);
  ASSERT_EQ(e1.size(), e2.size());
  for (const auto& [key, value] : e1) {
    ASSERT_TRUE(e2.count(key));
    EXPECT_DOUBLE_EQ(e2.at(key), value);
  }
}

TEST(SequenceFormTest, BehavioralRoundTrip) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const BehavioralStrategy b = RandomBehavioral(g.treeplex(1), rng);
    const BehavioralStrategy back = RealizationToBehavioral(
        g.treeplex(1), BehavioralToRealization(g.treeplex(1), b));
    for (size_t s = 0; s < b.probs.size(); ++s) {
      EXPECT_NEAR(back.probs[s], b.probs[s], 1e-12);
    }
  }
}

TEST(SequenceFormTest, ZeroMassInfosetMapsToUniform) {
  const SequenceFormGame g = BuildSequenceForm(BuiltinGame("kuhn"));
  const Treeplex& t = g.treeplex(0);
  BehavioralStrategy b = UniformBehavioral(t);
  // Always bet with J: the J|kb infoset is never reached.
  b.probs[1] = 0.0;
  b.probs[2] = 1.0;
  const BehavioralStrategy back =
      RealizationToBehavioral(t, BehavioralToRealization(t, b));
  EXPECT_DOUBLE_EQ(back.probs[3], 0.5);
  EXPECT_DOUBLE_EQ(back.probs[4], 0.5);
}

TEST(SequenceFormTest, RejectsInvalidPlans) {
  const Treeplex t = Treeplex::Simplex(2);
  EXPECT_TRUE(IsRealizationPlan(t, std::vector<double>{1.0, 0.3, 0.7}));
  EXPECT_FALSE(IsRealizationPlan(t, std::vector<double>{1.0, 0.3, 0.6}));
  EXPECT_FALSE(IsRealizationPlan(t, std::vector<double>{1.0, -0.1, 1.1}));
  EXPECT_FALSE(IsRealizationPlan(t, std::vector<double>{0.9, 0.3, 0.6}));
  EXPECT_THROW(ValidateRealizationPlan(t, std::vector<double>{1.0, 0.5}),
               InvalidArgument);
}

TEST(GameTreeTest, DetectsImperfectRecall) {
  // Player 1 moves twice and forgets the first move.
  GameTreeBuilder b;
  const int root = b.AddDecision(0, "a", {"l", "r"});
  const int left = b.AddDecision(0, "b", {"x", "y"});
  const int right = b.AddDecision(0, "b", {"x", "y"});
  b.Connect(root, 0, left);
  b.Connect(root, 1, right);
  for (int n : {left, right}) {
    b.Connect(n, 0, b.AddTerminal(1));
    b.Connect(n, 1, b.AddTerminal(-1));
  }
  const GameTree tree = std::move(b).Build(root);
  const auto report = FindPerfectRecallViolation(tree);
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->player, 0);
  try {
    ValidatePerfectRecall(tree);
    FAIL() << "expected PerfectRecallViolation";
  } catch (const PerfectRecallViolation& e) {
    EXPECT_EQ(e.player(), 0);
    EXPECT_EQ(e.infoset(), "b");
  }
}

TEST(GameTreeTest, KuhnHasPerfectRecall) {
  EXPECT_FALSE(FindPerfectRecallViolation(BuiltinGame("kuhn")).has_value());
}

TEST(GameTreeTest, RejectsBadChance) {
  GameTreeBuilder b;
  const int root = b.AddChance({"a", "b"}, {0.5, 0.6});
  b.Connect(root, 0, b.AddTerminal(0));
  b.Connect(root, 1, b.AddTerminal(0));
  EXPECT_THROW(std::move(b).Build(root), InvalidGame);
}

}  // namespace
}  // namespace efg
