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

#include "efg/sequence_form.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "efg/errors.h"

namespace efg {

Treeplex::Treeplex(std::vector<InfosetSequences> infosets)
    : infosets_(std::move(infosets)) {
  for (int i = 0; i < num_infosets(); ++i) {
    InfosetSequences& info = infosets_[i];
    if (info.actions.empty()) {
      throw InvalidArgument("information set '" + info.label +
                            "' has no actions");
    }
    if (info.parent_sequence < 0 || info.parent_sequence >= num_sequences_) {
      throw InvalidArgument("information set '" + info.label +
                            "' has a parent sequence that does not precede it");
    }
    info.first_sequence = num_sequences_;
    child_infosets_[info.parent_sequence].push_back(i);
    for (int a = 0; a < info.num_actions(); ++a) {
      sequence_infoset_.push_back(i);
      child_infosets_.emplace_back();
    }
    num_sequences_ += info.num_actions();
  }
}

Treeplex Treeplex::Simplex(int num_actions) {
  if (num_actions < 1) throw InvalidArgument("simplex needs at least 1 action");
  InfosetSequences info;
  info.label = "simplex";
  for (int a = 0; a < num_actions; ++a) info.actions.push_back(std::to_string(a));
  return Treeplex({std::move(info)});
}

bool Treeplex::is_leaf_infoset(int i) const {
  const InfosetSequences& info = infosets_.at(i);
  for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
    if (!child_infosets_[s].empty()) return false;
  }
  return true;
}

std::string Treeplex::sequence_name(int s) const {
  if (s == kEmptySequence) return "<empty>";
  const InfosetSequences& info = infosets_.at(sequence_infoset_.at(s));
  return info.label + ":" + info.actions[s - info.first_sequence];
}

PayoffMatrix::PayoffMatrix(int rows, int cols, std::vector<PayoffEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  for (const PayoffEntry& e : entries_) {
    if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_) {
      throw InvalidArgument("payoff entry out of range");
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const PayoffEntry& a, const PayoffEntry& b) {
              return std::tie(a.row, a.col) < std::tie(b.row, b.col);
            });
  // Sum duplicate (row, col) contributions.
  std::vector<PayoffEntry> merged;
  merged.reserve(entries_.size());
  for (const PayoffEntry& e : entries_) {
    if (!merged.empty() && merged.back().row == e.row &&
        merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  entries_ = std::move(merged);

  row_start_.assign(rows_ + 1, 0);
  col_start_.assign(cols_ + 1, 0);
  for (const PayoffEntry& e : entries_) {
    ++row_start_[e.row + 1];
    ++col_start_[e.col + 1];
  }
  std::partial_sum(row_start_.begin(), row_start_.end(), row_start_.begin());
  std::partial_sum(col_start_.begin(), col_start_.end(), col_start_.begin());
  col_order_.resize(entries_.size());
  std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
  for (int k = 0; k < static_cast<int>(entries_.size()); ++k) {
    col_order_[fill[entries_[k].col]++] = k;
  }
}

std::span<const PayoffEntry> PayoffMatrix::row(int r) const {
  return std::span<const PayoffEntry>(entries_).subspan(
      row_start_[r], row_start_[r + 1] - row_start_[r]);
}

SequenceVector PayoffMatrix::Times(std::span<const double> y) const {
  if (static_cast<int>(y.size()) != cols_) {
    throw InvalidArgument("A*y: dimension mismatch");
  }
  SequenceVector out(rows_, 0.0);
  for (const PayoffEntry& e : entries_) out[e.row] += e.value * y[e.col];
  return out;
}

SequenceVector PayoffMatrix::TransposeTimes(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != rows_) {
    throw InvalidArgument("A^T*x: dimension mismatch");
  }
  SequenceVector out(cols_, 0.0);
  for (const PayoffEntry& e : entries_) out[e.col] += e.value * x[e.row];
  return out;
}

double PayoffMatrix::Bilinear(std::span<const double> x,
                              std::span<const double> y) const {
  if (static_cast<int>(x.size()) != rows_ ||
      static_cast<int>(y.size()) != cols_) {
    throw InvalidArgument("x'Ay: dimension mismatch");
  }
  double total = 0.0;
  for (const PayoffEntry& e : entries_) total += x[e.row] * e.value * y[e.col];
  return total;
}

SequenceFormGame::SequenceFormGame(Treeplex row, Treeplex col,
                                   PayoffMatrix payoff,
                                   std::vector<ChanceComponent> components,
                                   double bound)
    : treeplex_{std::move(row), std::move(col)},
      payoff_(std::move(payoff)),
      components_(std::move(components)),
      bound_(bound) {
  if (payoff_.rows() != treeplex_[0].num_sequences() ||
      payoff_.cols() != treeplex_[1].num_sequences()) {
    throw InvalidArgument("payoff matrix does not match the sequence counts");
  }
  for (const ChanceComponent& c : components_) {
    if (c.root_prob != components_.front().root_prob) {
      uniform_root_chance_ = false;
    }
  }
}

SequenceVector SequenceFormGame::UtilityGradient(
    int player, std::span<const double> opponent) const {
  if (player == kRowPlayer) return payoff_.Times(opponent);
  SequenceVector g = payoff_.TransposeTimes(opponent);
  for (double& v : g) v = -v;
  return g;
}

namespace {

Treeplex CompileTreeplex(const GameTree& tree, int player) {
  std::vector<InfosetSequences> infosets;
  std::vector<int> first_sequence;
  int next = 1;
  for (int i = 0; i < tree.num_infosets(player); ++i) {
    const InfosetInfo& info = tree.infoset(player, i);
    const std::vector<OwnMove> history =
        OwnHistory(tree, info.nodes.front(), player);
    InfosetSequences seq;
    seq.label = info.label;
    seq.actions = info.actions;
    seq.parent_sequence =
        history.empty() ? kEmptySequence
                        : first_sequence[history.back().infoset] +
                              history.back().action;
    first_sequence.push_back(next);
    next += static_cast<int>(info.actions.size());
    infosets.push_back(std::move(seq));
  }
  return Treeplex(std::move(infosets));
}

// Walks the subtree at `start` and emits one entry per terminal, weighted by
// the chance reach below `start`.
void CollectPayoffs(const GameTree& tree, const Treeplex (&tp)[kNumPlayers],
                    int start, std::vector<PayoffEntry>* out) {
  struct Frame {
    int node;
    int seq[kNumPlayers];
    double reach;
  };
  std::vector<Frame> stack = {{start, {kEmptySequence, kEmptySequence}, 1.0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const Node& node = tree.node(f.node);
    switch (node.kind) {
      case NodeKind::kTerminal:
        out->push_back({f.seq[0], f.seq[1], f.reach * node.utility});
        break;
      case NodeKind::kChance:
        for (size_t a = 0; a < node.children.size(); ++a) {
          stack.push_back({node.children[a], {f.seq[0], f.seq[1]},
                           f.reach * node.chance_probs[a]});
        }
        break;
      case NodeKind::kDecision: {
        const int first = tp[node.player].infoset(node.infoset).first_sequence;
        for (size_t a = 0; a < node.children.size(); ++a) {
          Frame child{node.children[a], {f.seq[0], f.seq[1]}, f.reach};
          child.seq[node.player] = first + static_cast<int>(a);
          stack.push_back(child);
        }
        break;
      }
    }
  }
}

}  // namespace

SequenceFormGame BuildSequenceForm(const GameTree& tree) {
  ValidatePerfectRecall(tree);
  Treeplex tp[kNumPlayers] = {CompileTreeplex(tree, kRowPlayer),
                              CompileTreeplex(tree, kColumnPlayer)};
  const int rows = tp[0].num_sequences();
  const int cols = tp[1].num_sequences();

  std::vector<PayoffEntry> entries;
  entries.reserve(tree.num_terminals());
  CollectPayoffs(tree, tp, tree.root(), &entries);
  PayoffMatrix payoff(rows, cols, std::move(entries));

  std::vector<ChanceComponent> components;
  const Node& root = tree.node(tree.root());
  if (root.kind == NodeKind::kChance) {
    for (size_t i = 0; i < root.children.size(); ++i) {
      std::vector<PayoffEntry> part;
      CollectPayoffs(tree, tp, root.children[i], &part);
      components.push_back({root.actions[i], root.chance_probs[i],
                            PayoffMatrix(rows, cols, std::move(part))});
    }
  } else {
    components.push_back({"all", 1.0, payoff});
  }
  return SequenceFormGame(std::move(tp[0]), std::move(tp[1]),
                          std::move(payoff), std::move(components),
                          tree.max_abs_utility());
}

double ExpectedValue(const SequenceFormGame& game, std::span<const double> x,
                     std::span<const double> y) {
  return game.payoff().Bilinear(x, y);
}

BehavioralStrategy UniformBehavioral(const Treeplex& treeplex) {
  BehavioralStrategy b;
  b.probs.assign(treeplex.num_sequences(), 1.0);
  for (const InfosetSequences& info : treeplex.infosets()) {
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      b.probs[s] = 1.0 / info.num_actions();
    }
  }
  return b;
}

RealizationPlan UniformPlan(const Treeplex& treeplex) {
  return BehavioralToRealization(treeplex, UniformBehavioral(treeplex));
}

RealizationPlan BehavioralToRealization(const Treeplex& treeplex,
                                        const BehavioralStrategy& behavioral) {
  if (static_cast<int>(behavioral.probs.size()) != treeplex.num_sequences()) {
    throw InvalidArgument("behavioral strategy has the wrong dimension");
  }
  RealizationPlan x(treeplex.num_sequences(), 0.0);
  x[kEmptySequence] = 1.0;
  for (const InfosetSequences& info : treeplex.infosets()) {
    const double parent = x[info.parent_sequence];
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      x[s] = parent * behavioral.probs[s];
    }
  }
  return x;
}

BehavioralStrategy RealizationToBehavioral(const Treeplex& treeplex,
                                           std::span<const double> plan) {
  if (static_cast<int>(plan.size()) != treeplex.num_sequences()) {
    throw InvalidArgument("realization plan has the wrong dimension");
  }
  BehavioralStrategy b;
  b.probs.assign(treeplex.num_sequences(), 1.0);
  for (const InfosetSequences& info : treeplex.infosets()) {
    double mass = 0.0;
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      mass += plan[s];
    }
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      b.probs[s] = mass > 0.0 ? plan[s] / mass : 1.0 / info.num_actions();
    }
  }
  return b;
}

bool IsBehavioralStrategy(const Treeplex& treeplex,
                          const BehavioralStrategy& behavioral,
                          double tolerance) {
  if (static_cast<int>(behavioral.probs.size()) != treeplex.num_sequences()) {
    return false;
  }
  for (const InfosetSequences& info : treeplex.infosets()) {
    double total = 0.0;
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      if (!(behavioral.probs[s] >= 0.0)) return false;
      total += behavioral.probs[s];
    }
    if (std::abs(total - 1.0) > tolerance) return false;
  }
  return true;
}

void ValidateRealizationPlan(const Treeplex& treeplex,
                             std::span<const double> plan, double tolerance) {
  if (static_cast<int>(plan.size()) != treeplex.num_sequences()) {
    throw InvalidArgument("realization plan has " +
                          std::to_string(plan.size()) + " entries, expected " +
                          std::to_string(treeplex.num_sequences()));
  }
  if (std::abs(plan[kEmptySequence] - 1.0) > tolerance) {
    throw InvalidArgument("realization plan has x(empty) != 1");
  }
  for (int s = 0; s < treeplex.num_sequences(); ++s) {
    if (!(plan[s] >= -tolerance)) {
      throw InvalidArgument("realization plan is negative at " +
                            treeplex.sequence_name(s));
    }
  }
  for (const InfosetSequences& info : treeplex.infosets()) {
    double total = 0.0;
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      total += plan[s];
    }
    if (std::abs(total - plan[info.parent_sequence]) > tolerance) {
      throw InvalidArgument("flow constraint violated at information set '" +
                            info.label + "'");
    }
  }
}

bool IsRealizationPlan(const Treeplex& treeplex, std::span<const double> plan,
                       double tolerance) {
  try {
    ValidateRealizationPlan(treeplex, plan, tolerance);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

}  // namespace efg
