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

#ifndef EFG_SEQUENCE_FORM_H_
#define EFG_SEQUENCE_FORM_H_

#include <span>
#include <string>
#include <vector>

#include "efg/game_tree.h"

namespace efg {

inline constexpr int kEmptySequence = 0;
inline constexpr double kPlanTolerance = 1e-9;

// A sequence-indexed vector (realization plan, gradient, utility). Index 0 is
// the empty sequence.
using SequenceVector = std::vector<double>;
using RealizationPlan = SequenceVector;

struct InfosetSequences {
  std::string label;
  std::vector<std::string> actions;
  int parent_sequence = kEmptySequence;
  // Owned sequences (I, a) are [first_sequence, first_sequence + num_actions).
  int first_sequence = 1;

  int num_actions() const { return static_cast<int>(actions.size()); }
  int end_sequence() const { return first_sequence + num_actions(); }
};

// The sequence structure of one player: information sets in an order where
// every parent sequence precedes the sequences it leads to. Iterating
// infosets in reverse therefore visits children before parents.
class Treeplex {
 public:
  Treeplex() = default;
  explicit Treeplex(std::vector<InfosetSequences> infosets);

  // A single information set with n actions directly under the empty
  // sequence: the probability simplex.
  static Treeplex Simplex(int num_actions);

  int num_sequences() const { return num_sequences_; }
  int num_infosets() const { return static_cast<int>(infosets_.size()); }
  const InfosetSequences& infoset(int i) const { return infosets_.at(i); }
  const std::vector<InfosetSequences>& infosets() const { return infosets_; }

  // Infoset owning sequence s, or -1 for the empty sequence.
  int sequence_infoset(int s) const { return sequence_infoset_.at(s); }
  int sequence_action(int s) const {
    return s - infosets_[sequence_infoset_.at(s)].first_sequence;
  }
  const std::vector<int>& child_infosets(int s) const {
    return child_infosets_.at(s);
  }
  bool is_leaf_infoset(int i) const;

  // "<infoset>:<action>" or "<empty>" for index 0.
  std::string sequence_name(int s) const;

 private:
  std::vector<InfosetSequences> infosets_;
  std::vector<int> sequence_infoset_ = {-1};
  std::vector<std::vector<int>> child_infosets_ = {{}};
  int num_sequences_ = 1;
};

struct PayoffEntry {
  int row;
  int col;
  double value;
  bool operator==(const PayoffEntry&) const = default;
};

// Sparse sequence-form payoff matrix A, entries sorted by (row, col) with no
// duplicates. A column-major index supports touching single columns.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  PayoffMatrix(int rows, int cols, std::vector<PayoffEntry> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<PayoffEntry>& entries() const { return entries_; }

  // Entries in row r / column c.
  std::span<const PayoffEntry> row(int r) const;
  template <typename Fn>
  void ForEachInColumn(int c, Fn&& fn) const {
    for (int k = col_start_[c]; k < col_start_[c + 1]; ++k) {
      fn(entries_[col_order_[k]]);
    }
  }

  SequenceVector Times(std::span<const double> y) const;           // A y
  SequenceVector TransposeTimes(std::span<const double> x) const;  // A^T x
  double Bilinear(std::span<const double> x, std::span<const double> y) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<PayoffEntry> entries_;
  std::vector<int> row_start_;
  std::vector<int> col_start_;
  std::vector<int> col_order_;
};

// A = sum_i A_i split by the outcome of a chance node at the root. Each
// component stores the payoff conditional on its outcome together with that
// outcome's probability, so A_i = root_prob * conditional.
struct ChanceComponent {
  std::string outcome;
  double root_prob = 1.0;
  PayoffMatrix conditional;
};

class SequenceFormGame {
 public:
  SequenceFormGame(Treeplex row, Treeplex col, PayoffMatrix payoff,
                   std::vector<ChanceComponent> components, double bound);

  const Treeplex& treeplex(int player) const { return treeplex_[player]; }
  int num_sequences(int player) const {
    return treeplex_[player].num_sequences();
  }
  const PayoffMatrix& payoff() const { return payoff_; }
  const std::vector<ChanceComponent>& chance_components() const {
    return components_;
  }
  // True when the root chance outcomes are equally likely (or there is no
  // root chance node), so p * A_i equals the conditional payoff exactly.
  bool uniform_root_chance() const { return uniform_root_chance_; }

  // L = max |u_1(z)|.
  double payoff_bound() const { return bound_; }

  // Utility gradient of `player` against the opponent's plan: A y for the row
  // player, -A^T x for the column player.
  SequenceVector UtilityGradient(int player,
                                 std::span<const double> opponent) const;

 private:
  Treeplex treeplex_[kNumPlayers];
  PayoffMatrix payoff_;
  std::vector<ChanceComponent> components_;
  bool uniform_root_chance_ = true;
  double bound_ = 0.0;
};

// Compiles a perfect-recall tree. Sequence and infoset numbering follows the
// tree's depth-first preorder, so it does not depend on node ids.
SequenceFormGame BuildSequenceForm(const GameTree& tree);

// x'Ay.
double ExpectedValue(const SequenceFormGame& game, std::span<const double> x,
                     std::span<const double> y);

// Per-sequence conditional action probabilities; probs[0] is 1.
struct BehavioralStrategy {
  std::vector<double> probs;
};

BehavioralStrategy UniformBehavioral(const Treeplex& treeplex);
RealizationPlan UniformPlan(const Treeplex& treeplex);

RealizationPlan BehavioralToRealization(const Treeplex& treeplex,
                                        const BehavioralStrategy& behavioral);
// Infosets whose parent sequence carries zero mass map to uniform.
BehavioralStrategy RealizationToBehavioral(const Treeplex& treeplex,
                                           std::span<const double> plan);

bool IsBehavioralStrategy(const Treeplex& treeplex,
                          const BehavioralStrategy& behavioral,
                          double tolerance = kPlanTolerance);
bool IsRealizationPlan(const Treeplex& treeplex, std::span<const double> plan,
                       double tolerance = kPlanTolerance);
// Throws InvalidArgument describing the first violated constraint.
void ValidateRealizationPlan(const Treeplex& treeplex,
                             std::span<const double> plan,
                             double tolerance = kPlanTolerance);

}  // namespace efg

#endif  // EFG_SEQUENCE_FORM_H_
