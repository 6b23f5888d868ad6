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

#include "efg/dual_averaging.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "efg/errors.h"
#include "efg/simplex_learners.h"

namespace efg {

double StepSchedule::Beta(int64_t t, double payoff_bound) const {
  const double c = scale > 0.0 ? scale : payoff_bound;
  const double td = static_cast<double>(std::max<int64_t>(t, 1));
  switch (kind) {
    case StepKind::kConstant:
      return c;
    case StepKind::kInverseSqrt:
      return c / std::sqrt(td);
    case StepKind::kHedge:
      return 1.0 / (td * eta);
  }
  return c;
}

DualState::DualState(DilatedDGF dgf, StepSchedule schedule,
                     double payoff_bound)
    : dgf_(std::move(dgf)),
      schedule_(schedule),
      payoff_bound_(payoff_bound > 0.0 ? payoff_bound : 1.0),
      gradient_sum_(dgf_.treeplex().num_sequences(), 0.0) {
  if (schedule_.kind == StepKind::kHedge && !(schedule_.eta > 0.0)) {
    throw InvalidArgument("hedge-equivalent schedule needs eta > 0");
  }
  if (schedule_.scale < 0.0) {
    throw InvalidArgument("step scale must be nonnegative");
  }
}

void DualState::AddGradient(std::span<const double> loss_gradient) {
  if (loss_gradient.size() != gradient_sum_.size()) {
    throw InvalidArgument("dual averaging: gradient has the wrong dimension");
  }
  for (size_t s = 0; s < gradient_sum_.size(); ++s) {
    gradient_sum_[s] += loss_gradient[s];
  }
  ++t_;
}

RealizationPlan DualState::NextIterate() const {
  if (t_ == 0) {
    const SequenceVector zero(gradient_sum_.size(), 0.0);
    return dgf_.SmoothedBestResponse(zero, 1.0).plan;
  }
  SequenceVector average = gradient_sum_;
  for (double& v : average) v /= static_cast<double>(t_);
  return dgf_.SmoothedBestResponse(average, schedule_.Beta(t_, payoff_bound_))
      .plan;
}

void DualState::WarmStart(std::span<const double> loss_gradient, int64_t t0) {
  if (t0 < 1) throw InvalidArgument("warm start needs t0 >= 1");
  if (loss_gradient.size() != gradient_sum_.size()) {
    throw InvalidArgument("warm start: gradient has the wrong dimension");
  }
  for (size_t s = 0; s < gradient_sum_.size(); ++s) {
    gradient_sum_[s] = static_cast<double>(t0) * loss_gradient[s];
  }
  t_ = t0;
}

namespace {

DualState EntropyState(const SequenceFormGame& game, int player,
                       const StepSchedule& schedule, bool recenter_uniform) {
  DilatedDGF dgf(game.treeplex(player));
  if (recenter_uniform) dgf = dgf.Recenter(UniformPlan(game.treeplex(player)));
  return DualState(std::move(dgf), schedule, game.payoff_bound());
}

}  // namespace

DualAveragingSolver::DualAveragingSolver(const SequenceFormGame& game,
                                         DualState row, DualState column)
    : game_(&game),
      states_{std::move(row), std::move(column)},
      trackers_{SequenceRegretTracker(game.treeplex(0)),
                SequenceRegretTracker(game.treeplex(1))} {
  for (int p = 0; p < kNumPlayers; ++p) {
    if (states_[p].dgf().treeplex().num_sequences() != game.num_sequences(p)) {
      throw InvalidArgument("dual state does not match the game");
    }
    sum_[p].assign(game.num_sequences(p), 0.0);
    current_[p] = states_[p].NextIterate();
  }
}

DualAveragingSolver::DualAveragingSolver(const SequenceFormGame& game,
                                         const StepSchedule& schedule,
                                         bool recenter_uniform)
    : DualAveragingSolver(
          game, EntropyState(game, kRowPlayer, schedule, recenter_uniform),
          EntropyState(game, kColumnPlayer, schedule, recenter_uniform)) {}

void DualAveragingSolver::WarmStart(std::optional<RealizationPlan> prior_x,
                                    std::optional<RealizationPlan> prior_y,
                                    int64_t t0) {
  if (t_ != 0) throw InvalidArgument("warm start must precede the first step");
  if (prior_y) {
    ValidateRealizationPlan(game_->treeplex(kColumnPlayer), *prior_y);
    SequenceVector loss = game_->UtilityGradient(kRowPlayer, *prior_y);
    for (double& v : loss) v = -v;
    states_[kRowPlayer].WarmStart(loss, t0);
    current_[kRowPlayer] = states_[kRowPlayer].NextIterate();
  }
  if (prior_x) {
    ValidateRealizationPlan(game_->treeplex(kRowPlayer), *prior_x);
    SequenceVector loss = game_->UtilityGradient(kColumnPlayer, *prior_x);
    for (double& v : loss) v = -v;
    states_[kColumnPlayer].WarmStart(loss, t0);
    current_[kColumnPlayer] = states_[kColumnPlayer].NextIterate();
  }
}

void DualAveragingSolver::Step() {
  for (int p = 0; p < kNumPlayers; ++p) {
    const int opponent = 1 - p;
    const SequenceVector utility =
        game_->UtilityGradient(p, current_[opponent]);
    trackers_[p].Record(utility, current_[p]);
    SequenceVector loss = utility;
    for (double& v : loss) v = -v;
    states_[p].AddGradient(loss);
    for (size_t s = 0; s < sum_[p].size(); ++s) sum_[p][s] += current_[p][s];
  }
  for (int p = 0; p < kNumPlayers; ++p) current_[p] = states_[p].NextIterate();
  ++t_;
}

RealizationPlan DualAveragingSolver::Average(int player) const {
  if (t_ == 0) return current_[player];
  RealizationPlan avg = sum_[player];
  for (double& v : avg) v /= static_cast<double>(t_);
  return avg;
}

SolverResult RunDualAveraging(const SequenceFormGame& game,
                              const DaOptions& options, int64_t iterations,
                              const LogOptions& log, IterateChoice iterate) {
  RunLog run_log(iterations, log);
  DualAveragingSolver solver(game, options.schedule, options.recenter_uniform);
  if (options.prior_x || options.prior_y) {
    solver.WarmStart(options.prior_x, options.prior_y, options.t0);
  }
  SolverResult result;
  RealizationPlan played[kNumPlayers];
  for (int64_t t = 1; t <= iterations; ++t) {
    played[0] = solver.current(kRowPlayer);
    played[1] = solver.current(kColumnPlayer);
    solver.Step();
    if (!run_log.ShouldLog(t)) continue;
    ConvergenceRecord r;
    r.iteration = t;
    const RealizationPlan x = solver.Average(kRowPlayer);
    const RealizationPlan y = solver.Average(kColumnPlayer);
    r.average_gap = NashGap(game, x, y).gap;
    r.nash_gap = iterate == IterateChoice::kAverage
                     ? r.average_gap
                     : NashGap(game, played[0], played[1]).gap;
    for (int p = 0; p < kNumPlayers; ++p) {
      r.avg_regret[p] = solver.tracker(p).AverageRegret();
      r.bound[p] = std::numeric_limits<double>::quiet_NaN();
    }
    r.wall_ms = run_log.Lap();
    result.records.push_back(r);
  }
  result.x_average = solver.Average(kRowPlayer);
  result.y_average = solver.Average(kColumnPlayer);
  result.x_current = played[0];
  result.y_current = played[1];
  return result;
}

double HedgeDaEquivalenceCheck(std::span<const std::vector<double>> utilities,
                               double eta) {
  if (utilities.empty()) throw InvalidArgument("empty utility stream");
  const int n = static_cast<int>(utilities.front().size());
  double bound = 1.0;
  for (const std::vector<double>& u : utilities) {
    for (double v : u) bound = std::max(bound, std::abs(v));
  }
  CumulativeRegret hedge(n, bound);
  StepSchedule schedule{StepKind::kHedge, 0.0, eta};
  DualState da(DilatedDGF(Treeplex::Simplex(n)), schedule, bound);
  double deviation = 0.0;
  for (const std::vector<double>& u : utilities) {
    const std::vector<double> x = HedgeNext(hedge, eta);
    const RealizationPlan plan = da.NextIterate();
    for (int a = 0; a < n; ++a) {
      deviation = std::max(deviation, std::abs(x[a] - plan[a + 1]));
    }
    hedge.RecordUtility(u, x);
    SequenceVector loss(n + 1, 0.0);
    for (int a = 0; a < n; ++a) loss[a + 1] = -u[a];
    da.AddGradient(loss);
  }
  return deviation;
}

double RmDaEquivalenceCheck(std::span<const std::vector<double>> utilities) {
  if (utilities.empty()) throw InvalidArgument("empty utility stream");
  const size_t n = utilities.front().size();
  double bound = 1.0;
  for (const std::vector<double>& u : utilities) {
    for (double v : u) bound = std::max(bound, std::abs(v));
  }
  CumulativeRegret rm(static_cast<int>(n), bound);
  // The dual side keeps its own loss sum g = -sum_t r^t, with r^t the
  // instantaneous regret of its own iterate.
  std::vector<double> loss_sum(n, 0.0);
  std::vector<double> dual_regret(n, 0.0);
  std::vector<double> z(n, 1.0 / static_cast<double>(n));
  double deviation = 0.0;
  int64_t t = 0;
  for (const std::vector<double>& u : utilities) {
    const std::vector<double> x = RegretMatchingNext(rm);
    if (t > 0) {
      for (size_t i = 0; i < n; ++i) dual_regret[i] = -loss_sum[i];
      z = QuadraticProx(dual_regret, t);
    }
    for (size_t i = 0; i < n; ++i) {
      deviation = std::max(deviation, std::abs(x[i] - z[i]));
    }
    rm.RecordUtility(u, x);
    double expected = 0.0;
    for (size_t i = 0; i < n; ++i) expected += u[i] * z[i];
    for (size_t i = 0; i < n; ++i) loss_sum[i] -= u[i] - expected;
    ++t;
  }
  return deviation;
}

}  // namespace efg
