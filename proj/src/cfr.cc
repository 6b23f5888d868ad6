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

#include "efg/cfr.h"

#include <utility>

#include "efg/errors.h"
#include "efg/simplex_learners.h"

namespace efg {

SequenceVector CounterfactualUtilities(const Treeplex& treeplex,
                                       std::span<const double> gradient,
                                       const BehavioralStrategy& own,
                                       std::vector<double>* infoset_values) {
  if (static_cast<int>(gradient.size()) != treeplex.num_sequences() ||
      static_cast<int>(own.probs.size()) != treeplex.num_sequences()) {
    throw InvalidArgument("counterfactual utilities: dimension mismatch");
  }
  SequenceVector cf(gradient.begin(), gradient.end());
  if (infoset_values) infoset_values->assign(treeplex.num_infosets(), 0.0);
  for (int i = treeplex.num_infosets() - 1; i >= 0; --i) {
    const InfosetSequences& info = treeplex.infoset(i);
    double value = 0.0;
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      value += own.probs[s] * cf[s];
    }
    cf[info.parent_sequence] += value;
    if (infoset_values) (*infoset_values)[i] = value;
  }
  return cf;
}

SequenceVector CounterfactualUtilities(const SequenceFormGame& game,
                                       int player,
                                       const BehavioralStrategy& own,
                                       std::span<const double> opponent,
                                       std::vector<double>* infoset_values) {
  return CounterfactualUtilities(game.treeplex(player),
                                 game.UtilityGradient(player, opponent), own,
                                 infoset_values);
}

RegretTable::RegretTable(const Treeplex& treeplex,
                         const LearnerOptions& options, double utility_bound)
    : treeplex_(&treeplex),
      options_(options),
      bound_(utility_bound > 0.0 ? utility_bound : 1.0),
      values_(treeplex.num_sequences(), 0.0) {
  if (options_.learner == Learner::kHedge) {
    if (options_.rate == RateSchedule::kConstant && !(options_.eta > 0.0)) {
      throw InvalidArgument("constant hedge rate must be positive");
    }
    if (options_.rate == RateSchedule::kFixedHorizon && options_.horizon < 1) {
      throw InvalidArgument("fixed-horizon hedge rate needs a horizon");
    }
  }
}

double RegretTable::Rate(int infoset) const {
  const int n = treeplex_->infoset(infoset).num_actions();
  switch (options_.rate) {
    case RateSchedule::kConstant:
      return options_.eta;
    case RateSchedule::kFixedHorizon:
      return FixedHorizonHedgeRate(n, options_.horizon, bound_);
    case RateSchedule::kAnytime:
      break;
  }
  return AnytimeHedgeRate(n, t_ + 1, bound_);
}

BehavioralStrategy RegretTable::Policy() const {
  BehavioralStrategy b;
  b.probs.assign(values_.size(), 1.0);
  for (int i = 0; i < treeplex_->num_infosets(); ++i) {
    const InfosetSequences& info = treeplex_->infoset(i);
    const std::span<const double> in(values_.data() + info.first_sequence,
                                     info.num_actions());
    const std::span<double> out(b.probs.data() + info.first_sequence,
                                info.num_actions());
    if (options_.learner == Learner::kRegretMatching) {
      RegretMatchingPolicy(in, out);
    } else {
      HedgePolicy(in, Rate(i), out);
    }
  }
  return b;
}

void RegretTable::Update(std::span<const double> cf_utilities,
                         std::span<const double> infoset_values) {
  for (int i = 0; i < treeplex_->num_infosets(); ++i) {
    const InfosetSequences& info = treeplex_->infoset(i);
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      // Hedge is invariant to shifting all of an infoset's entries, so it
      // accumulates raw counterfactual utility.
      values_[s] += options_.learner == Learner::kRegretMatching
                        ? cf_utilities[s] - infoset_values[i]
                        : cf_utilities[s];
    }
  }
  ++t_;
}

double RegretTable::AverageRegretBound() const {
  if (t_ == 0) return 0.0;
  double total = 0.0;
  for (int i = 0; i < treeplex_->num_infosets(); ++i) {
    const int n = treeplex_->infoset(i).num_actions();
    if (options_.learner == Learner::kRegretMatching) {
      total += RegretMatchingBound(n, t_, bound_);
    } else if (options_.rate == RateSchedule::kAnytime) {
      total += AnytimeHedgeBound(n, t_, bound_);
    } else {
      const double eta = options_.rate == RateSchedule::kConstant
                             ? options_.eta
                             : FixedHorizonHedgeRate(n, options_.horizon,
                                                     bound_);
      total += HedgeBound(n, t_, eta, bound_);
    }
  }
  return total / static_cast<double>(t_);
}

CfrSolver::CfrSolver(const SequenceFormGame& game, const CfrOptions& options)
    : game_(&game),
      options_(options),
      tables_{RegretTable(game.treeplex(0), options.learner,
                          game.payoff_bound()),
              RegretTable(game.treeplex(1), options.learner,
                          game.payoff_bound())},
      trackers_{SequenceRegretTracker(game.treeplex(0)),
                SequenceRegretTracker(game.treeplex(1))} {
  for (int p = 0; p < kNumPlayers; ++p) {
    sum_[p].assign(game.num_sequences(p), 0.0);
    policy_[p] = tables_[p].Policy();
    current_[p] = BehavioralToRealization(game.treeplex(p), policy_[p]);
  }
}

void CfrSolver::Update(int player, std::span<const double> opponent) {
  std::vector<double> values;
  const SequenceVector gradient = game_->UtilityGradient(player, opponent);
  const SequenceVector cf = CounterfactualUtilities(
      game_->treeplex(player), gradient, policy_[player], &values);
  trackers_[player].Record(gradient, current_[player]);
  tables_[player].Update(cf, values);
}

void CfrSolver::Iterate() {
  for (int p = 0; p < kNumPlayers; ++p) {
    policy_[p] = tables_[p].Policy();
    current_[p] = BehavioralToRealization(game_->treeplex(p), policy_[p]);
    for (size_t s = 0; s < sum_[p].size(); ++s) sum_[p][s] += current_[p][s];
  }
  if (options_.mode == UpdateMode::kSimultaneous) {
    const RealizationPlan x = current_[kRowPlayer];
    Update(kRowPlayer, current_[kColumnPlayer]);
    Update(kColumnPlayer, x);
  } else {
    Update(kRowPlayer, current_[kColumnPlayer]);
    // The column player answers the row player's updated policy.
    const RealizationPlan next_x = BehavioralToRealization(
        game_->treeplex(kRowPlayer), tables_[kRowPlayer].Policy());
    Update(kColumnPlayer, next_x);
  }
  ++t_;
}

RealizationPlan CfrSolver::Average(int player) const {
  RealizationPlan avg = sum_[player];
  if (t_ == 0) return current_[player];
  for (double& v : avg) v /= static_cast<double>(t_);
  return avg;
}

SolverResult RunCfr(const SequenceFormGame& game, CfrOptions options,
                    int64_t iterations, const LogOptions& log,
                    IterateChoice iterate) {
  if (options.learner.rate == RateSchedule::kFixedHorizon &&
      options.learner.horizon == 0) {
    options.learner.horizon = iterations;
  }
  RunLog run_log(iterations, log);
  CfrSolver solver(game, options);
  SolverResult result;
  for (int64_t t = 1; t <= iterations; ++t) {
    solver.Iterate();
    if (!run_log.ShouldLog(t)) continue;
    ConvergenceRecord r;
    r.iteration = t;
    const RealizationPlan x = solver.Average(kRowPlayer);
    const RealizationPlan y = solver.Average(kColumnPlayer);
    r.average_gap = NashGap(game, x, y).gap;
    r.nash_gap = iterate == IterateChoice::kAverage
                     ? r.average_gap
                     : NashGap(game, solver.current(kRowPlayer),
                               solver.current(kColumnPlayer))
                           .gap;
    for (int p = 0; p < kNumPlayers; ++p) {
      r.avg_regret[p] = solver.tracker(p).AverageRegret();
      r.bound[p] = solver.table(p).AverageRegretBound();
    }
    r.wall_ms = run_log.Lap();
    result.records.push_back(r);
  }
  result.x_average = solver.Average(kRowPlayer);
  result.y_average = solver.Average(kColumnPlayer);
  result.x_current = solver.current(kRowPlayer);
  result.y_current = solver.current(kColumnPlayer);
  return result;
}

SolverResult RunCfrBr(const SequenceFormGame& game, CfrBrOptions options,
                      int64_t iterations, const LogOptions& log) {
  if (options.learner.rate == RateSchedule::kFixedHorizon &&
      options.learner.horizon == 0) {
    options.learner.horizon = iterations;
  }
  RunLog run_log(iterations, log);
  const Treeplex& row = game.treeplex(kRowPlayer);
  RegretTable table(row, options.learner, game.payoff_bound());
  SequenceRegretTracker trackers[kNumPlayers] = {
      SequenceRegretTracker(row),
      SequenceRegretTracker(game.treeplex(kColumnPlayer))};
  SequenceVector x_sum(game.num_sequences(kRowPlayer), 0.0);
  SequenceVector y_sum(game.num_sequences(kColumnPlayer), 0.0);
  RealizationPlan x, y;
  SolverResult result;
  auto average = [](const SequenceVector& sum, int64_t t) {
    RealizationPlan avg = sum;
    for (double& v : avg) v /= static_cast<double>(t);
    return avg;
  };
  for (int64_t t = 1; t <= iterations; ++t) {
    const BehavioralStrategy policy = table.Policy();
    x = BehavioralToRealization(row, policy);
    y = BestResponse(game, kColumnPlayer, x).plan;
    for (size_t s = 0; s < x.size(); ++s) x_sum[s] += x[s];
    for (size_t s = 0; s < y.size(); ++s) y_sum[s] += y[s];

    std::vector<double> values;
    const SequenceVector gradient = game.UtilityGradient(kRowPlayer, y);
    const SequenceVector cf =
        CounterfactualUtilities(row, gradient, policy, &values);
    trackers[kRowPlayer].Record(gradient, x);
    trackers[kColumnPlayer].Record(game.UtilityGradient(kColumnPlayer, x), y);
    table.Update(cf, values);

    if (!run_log.ShouldLog(t)) continue;
    ConvergenceRecord r;
    r.iteration = t;
    const RealizationPlan x_avg = average(x_sum, t);
    const RealizationPlan y_avg = average(y_sum, t);
    r.average_gap = NashGap(game, x_avg, y_avg).gap;
    r.nash_gap = options.iterate == IterateChoice::kAverage
                     ? r.average_gap
                     : NashGap(game, x, y_avg).gap;
    for (int p = 0; p < kNumPlayers; ++p) {
      r.avg_regret[p] = trackers[p].AverageRegret();
    }
    r.bound[kRowPlayer] = table.AverageRegretBound();
    // A best response has no regret against the row player's iterates.
    r.bound[kColumnPlayer] = 0.0;
    r.wall_ms = run_log.Lap();
    result.records.push_back(r);
  }
  result.x_average = average(x_sum, iterations);
  result.y_average = average(y_sum, iterations);
  result.x_current = x;
  result.y_current = y;
  return result;
}

}  // namespace efg
