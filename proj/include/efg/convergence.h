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

#ifndef EFG_CONVERGENCE_H_
#define EFG_CONVERGENCE_H_

#include <array>
#include <chrono>
#include <cstdint>
#include <vector>

#include "efg/sequence_form.h"

namespace efg {

enum class IterateChoice { kAverage, kCurrent };

// One logged iteration of a solver run.
struct ConvergenceRecord {
  int64_t iteration = 0;
  // Gap of the reported profile: the averages, or the current iterate.
  double nash_gap = 0.0;
  // Realized external regret over the realization-plan polytope divided by
  // the iteration count.
  std::array<double, kNumPlayers> avg_regret = {0.0, 0.0};
  // The learner's worst-case guarantee on that quantity; NaN when the solver
  // has none.
  std::array<double, kNumPlayers> bound = {0.0, 0.0};
  // Milliseconds spent since the previous record; 0 when timing is disabled.
  double wall_ms = 0.0;
  // Gap of the averaged profile, which the regrets certify.
  double average_gap = 0.0;
};

struct SolverResult {
  RealizationPlan x_average;
  RealizationPlan y_average;
  RealizationPlan x_current;
  RealizationPlan y_current;
  std::vector<ConvergenceRecord> records;
};

struct LogOptions {
  // 0 selects ceil(T / 200).
  int64_t stride = 0;
  bool wall_clock = true;
};

// Decides which iterations get a record and measures time between records.
class RunLog {
 public:
  RunLog(int64_t iterations, const LogOptions& options);

  int64_t stride() const { return stride_; }
  // Every multiple of the stride, plus the final iteration.
  bool ShouldLog(int64_t t) const { return t % stride_ == 0 || t == last_; }
  // Milliseconds since construction or the previous call.
  double Lap();

 private:
  int64_t stride_;
  int64_t last_;
  bool wall_clock_;
  std::chrono::steady_clock::time_point mark_;
};

int64_t DefaultLogStride(int64_t iterations);

}  // namespace efg

#endif  // EFG_CONVERGENCE_H_
