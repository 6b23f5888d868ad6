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

#include "efg/oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "efg/errors.h"

namespace efg {
namespace {

constexpr double kPivotEpsilon = 1e-12;

int SequenceOf(const SequenceFormGame& game, const Node& node, int action) {
  return game.treeplex(node.player).infoset(node.infoset).first_sequence +
         action;
}

}  // namespace

double TreeExpectedValue(const GameTree& tree, const SequenceFormGame& game,
                         const BehavioralStrategy& row,
                         const BehavioralStrategy& column) {
  const BehavioralStrategy* strategies[kNumPlayers] = {&row, &column};
  std::function<double(int)> value = [&](int id) -> double {
    const Node& node = tree.node(id);
    if (node.kind == NodeKind::kTerminal) return node.utility;
    double total = 0.0;
    for (size_t a = 0; a < node.children.size(); ++a) {
      const double p =
          node.kind == NodeKind::kChance
              ? node.chance_probs[a]
              : strategies[node.player]
                    ->probs[SequenceOf(game, node, static_cast<int>(a))];
      if (p != 0.0) total += p * value(node.children[a]);
    }
    return total;
  };
  return value(tree.root());
}

SequenceVector TreeCounterfactualUtilities(const GameTree& tree,
                                           const SequenceFormGame& game,
                                           int player,
                                           const BehavioralStrategy& own,
                                           const BehavioralStrategy& opponent) {
  SequenceVector cf(game.num_sequences(player), 0.0);
  const double sign = player == kRowPlayer ? 1.0 : -1.0;
  // Returns the player's expected utility below `id`; `reach` is the
  // opponent-and-chance probability of reaching `id`.
  std::function<double(int, double)> visit = [&](int id,
                                                 double reach) -> double {
    const Node& node = tree.node(id);
    if (node.kind == NodeKind::kTerminal) return sign * node.utility;
    double total = 0.0;
    for (size_t a = 0; a < node.children.size(); ++a) {
      const int action = static_cast<int>(a);
      if (node.kind == NodeKind::kChance) {
        total += node.chance_probs[a] *
                 visit(node.children[a], reach * node.chance_probs[a]);
      } else if (node.player == player) {
        const int s = SequenceOf(game, node, action);
        const double v = visit(node.children[a], reach);
        cf[s] += reach * v;
        total += own.probs[s] * v;
      } else {
        const double p = opponent.probs[SequenceOf(game, node, action)];
        total += p * visit(node.children[a], reach * p);
      }
    }
    return total;
  };
  visit(tree.root(), 1.0);
  return cf;
}

std::vector<RealizationPlan> EnumeratePurePlans(const Treeplex& treeplex) {
  const int n = treeplex.num_sequences();
  // Plans of the subtree below sequence s, as sets of realized sequences.
  std::function<std::vector<std::vector<int>>(int)> below =
      [&](int s) -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> combos = {{}};
    for (int j : treeplex.child_infosets(s)) {
      const InfosetSequences& info = treeplex.infoset(j);
      std::vector<std::vector<int>> options;
      for (int c = info.first_sequence; c < info.end_sequence(); ++c) {
        for (std::vector<int> tail : below(c)) {
          tail.push_back(c);
          options.push_back(std::move(tail));
        }
      }
      std::vector<std::vector<int>> next;
      for (const std::vector<int>& head : combos) {
        for (const std::vector<int>& option : options) {
          std::vector<int> merged = head;
          merged.insert(merged.end(), option.begin(), option.end());
          next.push_back(std::move(merged));
        }
      }
      combos = std::move(next);
    }
    return combos;
  };
  std::vector<RealizationPlan> plans;
  for (const std::vector<int>& set : below(kEmptySequence)) {
    RealizationPlan x(n, 0.0);
    x[kEmptySequence] = 1.0;
    for (int s : set) x[s] = 1.0;
    plans.push_back(std::move(x));
  }
  return plans;
}

MatrixGameSolution SolveMatrixGame(const std::vector<std::vector<double>>& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0 || m[0].empty()) throw InvalidArgument("empty matrix game");
  const int cols = static_cast<int>(m[0].size());
  double lowest = std::numeric_limits<double>::infinity();
  for (const std::vector<double>& r : m) {
    if (static_cast<int>(r.size()) != cols) {
      throw InvalidArgument("ragged matrix game");
    }
    for (double v : r) lowest = std::min(lowest, v);
  }
  // Shift so every entry is positive; the value moves by the same amount.
  const double shift = 1.0 - lowest;

  // max e'w s.t. M w <= e, w >= 0. Tableau columns: w, slacks, rhs.
  const int width = cols + rows + 1;
  std::vector<std::vector<double>> t(rows + 1, std::vector<double>(width, 0.0));
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t[i][j] = m[i][j] + shift;
    t[i][cols + i] = 1.0;
    t[i][width - 1] = 1.0;
    basis[i] = cols + i;
  }
  for (int j = 0; j < cols; ++j) t[rows][j] = -1.0;

  while (true) {
    int enter = -1;
    for (int j = 0; j < width - 1; ++j) {
      if (t[rows][j] < -kPivotEpsilon) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= kPivotEpsilon) continue;
      const double ratio = t[i][width - 1] / t[i][enter];
      if (ratio < best - kPivotEpsilon ||
          (ratio <= best + kPivotEpsilon && leave >= 0 &&
           basis[i] < basis[leave])) {
        best = std::min(best, ratio);
        leave = i;
      }
    }
    if (leave < 0) throw Error("matrix game LP is unbounded");
    const double pivot = t[leave][enter];
    for (double& v : t[leave]) v /= pivot;
    for (int i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == 0.0) continue;
      const double f = t[i][enter];
      for (int j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  const double total = t[rows][width - 1];  // e'w = 1 / shifted value
  MatrixGameSolution sol;
  sol.value = 1.0 / total - shift;
  sol.column.assign(cols, 0.0);
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < cols) sol.column[basis[i]] = t[i][width - 1] / total;
  }
  sol.row.assign(rows, 0.0);
  for (int i = 0; i < rows; ++i) sol.row[i] = t[rows][cols + i] / total;
  return sol;
}

double GameValueByEnumeration(const SequenceFormGame& game) {
  const std::vector<RealizationPlan> xs =
      EnumeratePurePlans(game.treeplex(kRowPlayer));
  const std::vector<RealizationPlan> ys =
      EnumeratePurePlans(game.treeplex(kColumnPlayer));
  std::vector<std::vector<double>> m(xs.size(),
                                     std::vector<double>(ys.size()));
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = 0; j < ys.size(); ++j) {
      m[i][j] = ExpectedValue(game, xs[i], ys[j]);
    }
  }
  return SolveMatrixGame(m).value;
}

double BestResponseValueByEnumeration(const SequenceFormGame& game,
                                      int player,
                                      const RealizationPlan& opponent) {
  double best = player == kRowPlayer ? -std::numeric_limits<double>::infinity()
                                     : std::numeric_limits<double>::infinity();
  for (const RealizationPlan& plan : EnumeratePurePlans(game.treeplex(player))) {
    const double v = player == kRowPlayer ? ExpectedValue(game, plan, opponent)
                                          : ExpectedValue(game, opponent, plan);
    best = player == kRowPlayer ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

}  // namespace efg
