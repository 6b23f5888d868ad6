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

#include "efg/evaluation.h"

#include "efg/errors.h"

namespace efg {

BestResponseResult BestResponseToGradient(const Treeplex& treeplex,
                                          std::span<const double> gradient) {
  const int n = treeplex.num_sequences();
  if (static_cast<int>(gradient.size()) != n) {
    throw InvalidArgument("best response: gradient has the wrong dimension");
  }
  // value[s]: gradient at s plus the best values of the infosets below it.
  SequenceVector value(gradient.begin(), gradient.end());
  std::vector<int> choice(treeplex.num_infosets(), 0);
  for (int i = treeplex.num_infosets() - 1; i >= 0; --i) {
    const InfosetSequences& info = treeplex.infoset(i);
    int best = info.first_sequence;
    for (int s = info.first_sequence + 1; s < info.end_sequence(); ++s) {
      if (value[s] > value[best]) best = s;
    }
    choice[i] = best;
    value[info.parent_sequence] += value[best];
  }
  BestResponseResult result{RealizationPlan(n, 0.0), value[kEmptySequence]};
  result.plan[kEmptySequence] = 1.0;
  for (int i = 0; i < treeplex.num_infosets(); ++i) {
    const InfosetSequences& info = treeplex.infoset(i);
    if (result.plan[info.parent_sequence] > 0.0) result.plan[choice[i]] = 1.0;
  }
  return result;
}

BestResponseResult BestResponse(const SequenceFormGame& game, int player,
                                std::span<const double> opponent) {
  BestResponseResult br = BestResponseToGradient(
      game.treeplex(player), game.UtilityGradient(player, opponent));
  if (player == kColumnPlayer) br.value = -br.value;
  return br;
}

NashGapReport NashGap(const SequenceFormGame& game, std::span<const double> x,
                      std::span<const double> y) {
  NashGapReport r;
  r.br_value_vs_y = BestResponse(game, kRowPlayer, y).value;
  r.br_value_vs_x = BestResponse(game, kColumnPlayer, x).value;
  r.value = ExpectedValue(game, x, y);
  r.gap = r.br_value_vs_y - r.br_value_vs_x;
  r.row_benefit = r.br_value_vs_y - r.value;
  r.column_benefit = r.value - r.br_value_vs_x;
  return r;
}

SequenceRegretTracker::SequenceRegretTracker(const Treeplex& treeplex)
    : treeplex_(&treeplex), gradient_sum_(treeplex.num_sequences(), 0.0) {}

void SequenceRegretTracker::Record(std::span<const double> gradient,
                                   std::span<const double> played) {
  if (gradient.size() != gradient_sum_.size() ||
      played.size() != gradient_sum_.size()) {
    throw InvalidArgument("regret tracker: dimension mismatch");
  }
  for (size_t s = 0; s < gradient.size(); ++s) {
    gradient_sum_[s] += gradient[s];
    realized_ += gradient[s] * played[s];
  }
  ++t_;
}

double SequenceRegretTracker::Regret() const {
  return BestResponseToGradient(*treeplex_, gradient_sum_).value - realized_;
}

double SequenceRegretTracker::AverageRegret() const {
  return t_ == 0 ? 0.0 : Regret() / static_cast<double>(t_);
}

FolkTheoremResult FolkTheoremCheck(double gap, double avg_regret_row,
                                   double avg_regret_column) {
  const double slack = gap - (avg_regret_row + avg_regret_column);
  return {slack <= kFolkSlack, slack, gap};
}

FolkTheoremResult FolkTheoremCheck(const SequenceFormGame& game,
                                   double avg_regret_row,
                                   double avg_regret_column,
                                   std::span<const double> x_avg,
                                   std::span<const double> y_avg) {
  return FolkTheoremCheck(NashGap(game, x_avg, y_avg).gap, avg_regret_row,
                          avg_regret_column);
}

}  // namespace efg
