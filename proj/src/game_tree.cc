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

#include "efg/game_tree.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "efg/errors.h"

namespace efg {
namespace {

std::string NodeName(int id) { return "node " + std::to_string(id); }

std::string FormatHistory(const GameTree& tree, int player,
                          const std::vector<OwnMove>& moves) {
  std::string out;
  for (const OwnMove& m : moves) {
    const InfosetInfo& info = tree.infoset(player, m.infoset);
    if (!out.empty()) out += ", ";
    out += info.label + ":" + info.actions[m.action];
  }
  return out;
}

}  // namespace

GameTree::GameTree(std::vector<Node> nodes, int root)
    : nodes_(std::move(nodes)), root_(root) {
  const int n = num_nodes();
  if (root_ < 0 || root_ >= n) throw InvalidGame("root id out of range");

  for (int id = 0; id < n; ++id) {
    const Node& node = nodes_[id];
    switch (node.kind) {
      case NodeKind::kDecision:
        if (node.player != kRowPlayer && node.player != kColumnPlayer) {
          throw InvalidGame(NodeName(id) + " has an invalid acting player");
        }
        if (node.infoset_label.empty()) {
          throw InvalidGame(NodeName(id) + " has no information set label");
        }
        [[fallthrough]];
      case NodeKind::kChance:
        if (node.actions.empty()) {
          throw InvalidGame(NodeName(id) + " is non-terminal with no actions");
        }
        if (node.children.size() != node.actions.size()) {
          throw InvalidGame(NodeName(id) + " has mismatched actions/children");
        }
        break;
      case NodeKind::kTerminal:
        if (!node.children.empty()) {
          throw InvalidGame(NodeName(id) + " is terminal but has children");
        }
        if (!std::isfinite(node.utility)) {
          throw InvalidGame(NodeName(id) + " has a non-finite utility");
        }
        break;
    }
    if (node.kind == NodeKind::kChance) {
      if (node.chance_probs.size() != node.actions.size()) {
        throw InvalidGame(NodeName(id) + " has mismatched chance probabilities");
      }
      double total = 0.0;
      for (double p : node.chance_probs) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
          throw InvalidGame(NodeName(id) + " has a negative chance probability");
        }
        total += p;
      }
      if (std::abs(total - 1.0) > kChanceSumTolerance) {
        throw InvalidGame(NodeName(id) + " chance probabilities sum to " +
                          std::to_string(total));
      }
    }
  }

  // Depth-first walk from the root; every node must be reached exactly once.
  parents_.assign(n, -1);
  std::vector<char> seen(n, 0);
  std::map<std::string, int> infoset_index[kNumPlayers];
  std::vector<int> stack = {root_};
  seen[root_] = 1;
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    preorder_.push_back(id);
    Node& node = nodes_[id];
    if (node.kind == NodeKind::kTerminal) {
      ++num_terminals_;
      max_abs_utility_ = std::max(max_abs_utility_, std::abs(node.utility));
      continue;
    }
    if (node.kind == NodeKind::kDecision) {
      auto& index = infoset_index[node.player];
      auto [it, inserted] = index.try_emplace(
          node.infoset_label, static_cast<int>(index.size()));
      if (inserted) {
        infosets_[node.player].push_back(
            InfosetInfo{node.infoset_label, node.actions, {}});
      }
      InfosetInfo& info = infosets_[node.player][it->second];
      if (info.actions != node.actions) {
        throw InvalidGame("information set '" + node.infoset_label +
                          "' has members with different action sets");
      }
      node.infoset = it->second;
      info.nodes.push_back(id);
    }
    for (int a = static_cast<int>(node.children.size()) - 1; a >= 0; --a) {
      const int child = node.children[a];
      if (child < 0 || child >= n) {
        throw InvalidGame(NodeName(id) + " has a dangling child");
      }
      if (seen[child]) {
        throw InvalidGame(NodeName(child) + " is reachable along two paths");
      }
      seen[child] = 1;
      parents_[child] = id;
      stack.push_back(child);
    }
  }
  for (int id = 0; id < n; ++id) {
    if (!seen[id]) throw InvalidGame(NodeName(id) + " is unreachable");
  }
}

int GameTreeBuilder::AddDecision(int player, std::string infoset_label,
                                 std::vector<std::string> actions) {
  Node node;
  node.kind = NodeKind::kDecision;
  node.player = player;
  node.infoset_label = std::move(infoset_label);
  node.children.assign(actions.size(), -1);
  node.actions = std::move(actions);
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

int GameTreeBuilder::AddChance(std::vector<std::string> actions,
                               std::vector<double> probs) {
  Node node;
  node.kind = NodeKind::kChance;
  node.children.assign(actions.size(), -1);
  node.actions = std::move(actions);
  node.chance_probs = std::move(probs);
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

int GameTreeBuilder::AddTerminal(double utility) {
  Node node;
  node.kind = NodeKind::kTerminal;
  node.utility = utility;
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

void GameTreeBuilder::Connect(int parent, int action_index, int child) {
  nodes_.at(parent).children.at(action_index) = child;
}

GameTree GameTreeBuilder::Build(int root) && {
  return GameTree(std::move(nodes_), root);
}

std::vector<OwnMove> OwnHistory(const GameTree& tree, int node, int player) {
  std::vector<OwnMove> moves;
  for (int child = node, parent = tree.parent(node); parent >= 0;
       child = parent, parent = tree.parent(parent)) {
    const Node& p = tree.node(parent);
    if (p.kind != NodeKind::kDecision || p.player != player) continue;
    int action = 0;
    while (p.children[action] != child) ++action;
    moves.push_back({p.infoset, action});
  }
  return {moves.rbegin(), moves.rend()};
}

std::optional<RecallReport> FindPerfectRecallViolation(const GameTree& tree) {
  for (int player = 0; player < kNumPlayers; ++player) {
    for (int i = 0; i < tree.num_infosets(player); ++i) {
      const std::vector<int>& members = tree.infoset(player, i).nodes;
      const std::vector<OwnMove> first = OwnHistory(tree, members[0], player);
      for (size_t k = 1; k < members.size(); ++k) {
        std::vector<OwnMove> other = OwnHistory(tree, members[k], player);
        if (other != first) {
          return RecallReport{player, i, first, std::move(other)};
        }
      }
    }
  }
  return std::nullopt;
}

void ValidatePerfectRecall(const GameTree& tree) {
  if (auto report = FindPerfectRecallViolation(tree)) {
    throw PerfectRecallViolation(
        report->player, tree.infoset(report->player, report->infoset).label,
        FormatHistory(tree, report->player, report->first),
        FormatHistory(tree, report->player, report->second));
  }
}

}  // namespace efg
