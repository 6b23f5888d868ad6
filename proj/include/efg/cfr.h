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

#ifndef EFG_CFR_H_
#define EFG_CFR_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "efg/convergence.h"
#include "efg/evaluation.h"
#include "efg/sequence_form.h"

namespace efg {

enum class Learner { kRegretMatching, kHedge };
enum class UpdateMode { kSimultaneous, kAlternating };

// Hedge step size at an information set with N actions, utility bound L:
//   kAnytime:      eta_t = sqrt(2 log N / t) / L
//   kFixedHorizon: eta   = sqrt(2 log N / T) / L
//   kConstant:     eta as given
enum class RateSchedule { kAnytime, kFixedHorizon, kConstant };

struct LearnerOptions {
  Learner learner = Learner::kRegretMatching;
  RateSchedule rate = RateSchedule::kAnytime;
  double eta = 0.0;     // kConstant
  int64_t horizon = 0;  // kFixedHorizon
};

// Counterfactual utility of every sequence (I, a) of the acting player, with
// the values of the information sets below (I, a) folded in under `own`:
//   cf(I,a) = g(I,a) + sum_{J below (I,a)} V(J),  V(J) = sum_b own(J,b) cf(J,b),
// where g is the player's utility gradient (a slice of A y or -A'x). If
// `infoset_values` is given it receives V per information set.
SequenceVector CounterfactualUtilities(const Treeplex& treeplex,
                                       std::span<const double> gradient,
                                       const BehavioralStrategy& own,
                                       std::vector<double>* infoset_values =
                                           nullptr);
SequenceVector CounterfactualUtilities(const SequenceFormGame& game,
                                       int player,
                                       const BehavioralStrategy& own,
                                       std::span<const double> opponent,
                                       std::vector<double>* infoset_values =
                                           nullptr);

// Per-information-set learner state of one player: cumulative counterfactual
// regrets for regret matching, cumulative counterfactual utilities for Hedge.
class RegretTable {
 public:
  RegretTable(const Treeplex& treeplex, const LearnerOptions& options,
              double utility_bound);

  const Treeplex& treeplex() const { return *treeplex_; }
  const LearnerOptions& options() const { return options_; }
  int64_t iterations() const { return t_; }
  const std::vector<double>& values() const { return values_; }

  // Hedge step size used for the next policy at information set i.
  double Rate(int infoset) const;
  // Behavioral policy for the next iteration.
  BehavioralStrategy Policy() const;
  // Folds in counterfactual utilities computed against the policy that was
  // just played.
  void Update(std::span<const double> cf_utilities,
              std::span<const double> infoset_values);
  // Sum over information sets of the learner's regret guarantee after the
  // recorded iterations, divided by the iteration count.
  double AverageRegretBound() const;

 private:
  const Treeplex* treeplex_;
  LearnerOptions options_;
  double bound_;
  std::vector<double> values_;
  int64_t t_ = 0;
};

struct CfrOptions {
  LearnerOptions learner;
  UpdateMode mode = UpdateMode::kSimultaneous;
};

// Self-play counterfactual regret minimization. The row player is rewarded
// with A y^t and the column player with -A'x^t.
class CfrSolver {
 public:
  CfrSolver(const SequenceFormGame& game, const CfrOptions& options);

  void Iterate();

  int64_t iterations() const { return t_; }
  // Plans played in the latest iteration.
  const RealizationPlan& current(int player) const { return current_[player]; }
  RealizationPlan Average(int player) const;
  const RegretTable& table(int player) const { return tables_[player]; }
  const SequenceRegretTracker& tracker(int player) const {
    return trackers_[player];
  }

 private:
  void Update(int player, std::span<const double> opponent);

  const SequenceFormGame* game_;
  CfrOptions options_;
  std::array<RegretTable, kNumPlayers> tables_;
  std::array<SequenceRegretTracker, kNumPlayers> trackers_;
  std::array<RealizationPlan, kNumPlayers> current_;
  std::array<BehavioralStrategy, kNumPlayers> policy_;
  std::array<SequenceVector, kNumPlayers> sum_;
  int64_t t_ = 0;
};

// Runs T iterations, logging the averages (and with kCurrent, the latest
// iterate) at the strides of RunLog. A fixed-horizon Hedge schedule without
// an explicit horizon uses T.
SolverResult RunCfr(const SequenceFormGame& game, CfrOptions options,
                    int64_t iterations, const LogOptions& log = {},
                    IterateChoice iterate = IterateChoice::kAverage);

struct CfrBrOptions {
  LearnerOptions learner{Learner::kHedge, RateSchedule::kAnytime};
  IterateChoice iterate = IterateChoice::kAverage;
};

// The row player runs CFR while the column player best-responds exactly to
// each iterate. The reported gap is that of (x, y_avg) with x the average or
// the current row iterate and y_avg the average of the best responses.
SolverResult RunCfrBr(const SequenceFormGame& game, CfrBrOptions options,
                      int64_t iterations, const LogOptions& log = {});

}  // namespace efg

#endif  // EFG_CFR_H_
