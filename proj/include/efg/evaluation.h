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

#ifndef EFG_EVALUATION_H_
#define EFG_EVALUATION_H_

#include <cstdint>
#include <span>

#include "efg/sequence_form.h"

namespace efg {

inline constexpr double kFolkSlack = 1e-9;

struct BestResponseResult {
  RealizationPlan plan;  // pure
  double value;          // max over pure plans of gradient . plan
};

// Maximizes gradient . x over the treeplex by a bottom-up max. Ties go to the
// lowest action index.
BestResponseResult BestResponseToGradient(const Treeplex& treeplex,
                                          std::span<const double> gradient);

// Best response of `player` to the opponent's plan. The value is reported as
// the payoff to player 1: max_x' x'Ay for the row player, min_y' x'Ay' for
// the column player.
BestResponseResult BestResponse(const SequenceFormGame& game, int player,
                                std::span<const double> opponent);

struct NashGapReport {
  double br_value_vs_y;  // max_x' x'Ay
  double br_value_vs_x;  // min_y' x'Ay'
  double value;          // x'Ay
  double gap;            // br_value_vs_y - br_value_vs_x
  double row_benefit;    // br_value_vs_y - value
  double column_benefit; // value - br_value_vs_x
};

NashGapReport NashGap(const SequenceFormGame& game, std::span<const double> x,
                      std::span<const double> y);

// External regret of one player over the realization-plan polytope:
// max_x' sum_t g^t . x' - sum_t g^t . x^t, with g^t that player's utility
// gradient at iteration t.
class SequenceRegretTracker {
 public:
  explicit SequenceRegretTracker(const Treeplex& treeplex);

  void Record(std::span<const double> gradient, std::span<const double> played);
  double Regret() const;
  double AverageRegret() const;
  int64_t iterations() const { return t_; }

 private:
  const Treeplex* treeplex_;
  SequenceVector gradient_sum_;
  double realized_ = 0.0;
  int64_t t_ = 0;
};

struct FolkTheoremResult {
  bool pass;
  // gap - (R1 + R2); the check passes when this is at most kFolkSlack.
  double slack;
  double gap;
};

// gap(x_avg, y_avg) <= R1/T + R2/T, with R_i realized external regrets.
FolkTheoremResult FolkTheoremCheck(const SequenceFormGame& game,
                                   double avg_regret_row,
                                   double avg_regret_column,
                                   std::span<const double> x_avg,
                                   std::span<const double> y_avg);
FolkTheoremResult FolkTheoremCheck(double gap, double avg_regret_row,
                                   double avg_regret_column);

}  // namespace efg

#endif  // EFG_EVALUATION_H_
