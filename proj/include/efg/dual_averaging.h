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

#ifndef EFG_DUAL_AVERAGING_H_
#define EFG_DUAL_AVERAGING_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "efg/convergence.h"
#include "efg/dilated_prox.h"
#include "efg/evaluation.h"
#include "efg/sequence_form.h"

namespace efg {

// beta^t multiplying the distance-generating function:
//   kConstant:     beta^t = c
//   kInverseSqrt:  beta^t = c / sqrt(t)
//   kHedge:        beta^t = 1 / (t eta), which reproduces Hedge with rate eta
enum class StepKind { kConstant, kInverseSqrt, kHedge };

struct StepSchedule {
  StepKind kind = StepKind::kInverseSqrt;
  // c for kConstant / kInverseSqrt; 0 selects the payoff bound L.
  double scale = 0.0;
  double eta = 1.0;  // kHedge

  double Beta(int64_t t, double payoff_bound) const;
};

// Dual averaging state of one player: x^{t+1} = argmin gbar^t.x + beta^t h(x)
// with gbar^t the average loss gradient.
class DualState {
 public:
  DualState(DilatedDGF dgf, StepSchedule schedule, double payoff_bound);

  const DilatedDGF& dgf() const { return dgf_; }
  const StepSchedule& schedule() const { return schedule_; }
  int64_t t() const { return t_; }
  const SequenceVector& gradient_sum() const { return gradient_sum_; }

  void AddGradient(std::span<const double> loss_gradient);
  // The next iterate; the prox at zero while t = 0.
  RealizationPlan NextIterate() const;
  // Treats `loss_gradient` as t0 observed gradients.
  void WarmStart(std::span<const double> loss_gradient, int64_t t0);

 private:
  DilatedDGF dgf_;
  StepSchedule schedule_;
  double payoff_bound_;
  SequenceVector gradient_sum_;
  int64_t t_ = 0;
};

// Self-play dual averaging (smoothed fictitious play): the row player sees
// loss -A y^t, the column player A'x^t.
class DualAveragingSolver {
 public:
  DualAveragingSolver(const SequenceFormGame& game, DualState row,
                      DualState column);
  // Entropy over each treeplex, optionally recentered at the uniform plan.
  DualAveragingSolver(const SequenceFormGame& game,
                      const StepSchedule& schedule, bool recenter_uniform);

  // Seeds the row player's duals with the gradient of `prior_y` (and the
  // column player's with `prior_x`), each counted t0 times. Must precede the
  // first Step.
  void WarmStart(std::optional<RealizationPlan> prior_x,
                 std::optional<RealizationPlan> prior_y, int64_t t0);

  // Plays the current iterates, records their gradients and computes the
  // next iterates.
  void Step();

  int64_t iterations() const { return t_; }
  const RealizationPlan& current(int player) const { return current_[player]; }
  RealizationPlan Average(int player) const;
  const DualState& state(int player) const { return states_[player]; }
  const SequenceRegretTracker& tracker(int player) const {
    return trackers_[player];
  }

 private:
  const SequenceFormGame* game_;
  std::array<DualState, kNumPlayers> states_;
  std::array<SequenceRegretTracker, kNumPlayers> trackers_;
  std::array<RealizationPlan, kNumPlayers> current_;
  std::array<SequenceVector, kNumPlayers> sum_;
  int64_t t_ = 0;
};

struct DaOptions {
  StepSchedule schedule;
  bool recenter_uniform = false;
  std::optional<RealizationPlan> prior_x;
  std::optional<RealizationPlan> prior_y;
  int64_t t0 = 1;
};

SolverResult RunDualAveraging(const SequenceFormGame& game,
                              const DaOptions& options, int64_t iterations,
                              const LogOptions& log = {},
                              IterateChoice iterate = IterateChoice::kAverage);

// Runs simplex Hedge with rate eta and entropy dual averaging with
// beta^t = 1/(t eta) on one utility stream; returns the largest coordinate
// difference between the two iterate sequences.
double HedgeDaEquivalenceCheck(std::span<const std::vector<double>> utilities,
                               double eta);
// Same for regret matching against the quadratic prox.
double RmDaEquivalenceCheck(std::span<const std::vector<double>> utilities);

}  // namespace efg

#endif  // EFG_DUAL_AVERAGING_H_
