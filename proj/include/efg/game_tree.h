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

#ifndef EFG_GAME_TREE_H_
#define EFG_GAME_TREE_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace efg {

// Player 1 is the row player and maximizes x'Ay; player 2 is the column
// player and minimizes it.
inline constexpr int kRowPlayer = 0;
inline constexpr int kColumnPlayer = 1;
inline constexpr int kNumPlayers = 2;

inline constexpr double kChanceSumTolerance = 1e-12;

enum class NodeKind { kDecision, kChance, kTerminal };

struct Node {
  NodeKind kind = NodeKind::kTerminal;
  // Decision nodes only.
  int player = -1;
  std::string infoset_label;
  // Filled in by GameTree: index of the information set within its player's
  // partition, numbered in depth-first preorder of first visit.
  int infoset = -1;

  std::vector<std::string> actions;
  std::vector<int> children;
  // Chance nodes only, aligned with `actions`.
  std::vector<double> chance_probs;
  // Terminal nodes only. Payoff to player 1; player 2 receives the negation.
  double utility = 0.0;
};

struct InfosetInfo {
  std::string label;
  std::vector<std::string> actions;
  // Member decision nodes in depth-first preorder.
  std::vector<int> nodes;
};

// An immutable two-player zero-sum extensive-form game. The constructor
// checks that the nodes form a rooted tree and that information sets are
// consistent; perfect recall is checked separately by ValidatePerfectRecall.
class GameTree {
 public:
  GameTree(std::vector<Node> nodes, int root);

  int root() const { return root_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const { return nodes_; }

  int num_infosets(int player) const {
    return static_cast<int>(infosets_.at(player).size());
  }
  const InfosetInfo& infoset(int player, int index) const {
    return infosets_.at(player).at(index);
  }

  // Node ids in depth-first preorder, children visited in action order.
  const std::vector<int>& preorder() const { return preorder_; }
  int parent(int id) const { return parents_.at(id); }
  int num_terminals() const { return num_terminals_; }

  // L = max |u_1(z)| over terminals.
  double max_abs_utility() const { return max_abs_utility_; }

 private:
  std::vector<Node> nodes_;
  int root_;
  std::vector<int> preorder_;
  std::vector<int> parents_;
  std::array<std::vector<InfosetInfo>, kNumPlayers> infosets_;
  int num_terminals_ = 0;
  double max_abs_utility_ = 0.0;
};

// Incremental construction of a GameTree. Node ids are assigned in insertion
// order; children are attached afterwards with Connect.
class GameTreeBuilder {
 public:
  int AddDecision(int player, std::string infoset_label,
                  std::vector<std::string> actions);
  int AddChance(std::vector<std::string> actions, std::vector<double> probs);
  int AddTerminal(double utility);
  void Connect(int parent, int action_index, int child);

  GameTree Build(int root) &&;

 private:
  std::vector<Node> nodes_;
};

// One entry of a player's own history: (information set, action index).
struct OwnMove {
  int infoset;
  int action;
  bool operator==(const OwnMove&) const = default;
};

struct RecallReport {
  int player;
  int infoset;
  std::vector<OwnMove> first;
  std::vector<OwnMove> second;
};

// Returns the first information set (in preorder) whose member histories
// disagree on the acting player's own move sequence, if any.
std::optional<RecallReport> FindPerfectRecallViolation(const GameTree& tree);

// Throws PerfectRecallViolation naming the offending information set.
void ValidatePerfectRecall(const GameTree& tree);

// Own move sequence leading to `node` for `player` (root first).
std::vector<OwnMove> OwnHistory(const GameTree& tree, int node, int player);

}  // namespace efg

#endif  // EFG_GAME_TREE_H_
