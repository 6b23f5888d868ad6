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

// Slow reference computations that work on the game tree or by exhaustive
// enumeration, used to cross-check the sequence-form code paths.

#ifndef EFG_ORACLES_H_
#define EFG_ORACLES_H_

#include <vector>

#include "efg/game_tree.h"
#include "efg/sequence_form.h"

namespace efg {

// Expected payoff to player 1 by recursion over the tree.
double TreeExpectedValue(const GameTree& tree, const SequenceFormGame& game,
                         const BehavioralStrategy& row,
                         const BehavioralStrategy& column);

// Counterfactual utility of every sequence of `player`, summed over the
// histories of its information set: opponent and chance reach times the
// player's expected utility after taking the action and following `own`.
SequenceVector TreeCounterfactualUtilities(const GameTree& tree,
                                           const SequenceFormGame& game,
                                           int player,
                                           const BehavioralStrategy& own,
                                           const BehavioralStrategy& opponent);

// All reduced pure realization plans: one action at every information set
// the plan reaches, none elsewhere.
std::vector<RealizationPlan> EnumeratePurePlans(const Treeplex& treeplex);

struct MatrixGameSolution {
  double value;                 // max_p min_q p'Mq
  std::vector<double> row;      // maximizer's mixed strategy
  std::vector<double> column;   // minimizer's mixed strategy
};

// Solves a finite zero-sum matrix game with a dense simplex method (Bland's
// rule). M is given row-major.
MatrixGameSolution SolveMatrixGame(const std::vector<std::vector<double>>& m);

// Value of the game from the matrix game over reduced pure plans.
double GameValueByEnumeration(const SequenceFormGame& game);

// max over the player's pure plans of its own payoff against `opponent`
// (reported as the payoff to player 1, like BestResponse).
double BestResponseValueByEnumeration(const SequenceFormGame& game,
                                      int player,
                                      const RealizationPlan& opponent);

}  // namespace efg

#endif  // EFG_ORACLES_H_
