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

#ifndef EFG_SIMPLEX_LEARNERS_H_
#define EFG_SIMPLEX_LEARNERS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace efg {

// Cumulative regret R^t of a learner over N actions with utilities bounded by
// L in sup norm.
class CumulativeRegret {
 public:
  CumulativeRegret(int num_actions, double utility_bound);

  int num_actions() const { return static_cast<int>(regrets_.size()); }
  int64_t iterations() const { return t_; }
  double utility_bound() const { return bound_; }
  const std::vector<double>& regrets() const { return regrets_; }

  // R += u - (u.x) e. Throws InvalidArgument on a dimension mismatch or when
  // |u_i| > L, since the regret bounds no longer apply.
  void RecordUtility(std::span<const double> utility,
                     std::span<const double> played);

 private:
  std::vector<double> regrets_;
  int64_t t_ = 0;
  double bound_;
};

// x proportional to max(R, 0); uniform when no entry is positive.
void RegretMatchingPolicy(std::span<const double> regrets,
                          std::span<double> policy);
// x proportional to exp(eta R), evaluated as exp(eta (R - max R)).
void HedgePolicy(std::span<const double> regrets, double eta,
                 std::span<double> policy);

std::vector<double> RegretMatchingNext(const CumulativeRegret& regret);
// Throws InvalidArgument unless eta > 0.
std::vector<double> HedgeNext(const CumulativeRegret& regret, double eta);

// eta = sqrt(2 log N / T) / L, tuned for a known horizon T.
double FixedHorizonHedgeRate(int num_actions, int64_t horizon,
                             double utility_bound);
// eta_t = sqrt(2 log N / t) / L, used for the play at iteration t.
double AnytimeHedgeRate(int num_actions, int64_t t, double utility_bound);

// L sqrt(N T).
double RegretMatchingBound(int num_actions, int64_t t, double utility_bound);
// log N / eta + eta t L^2 / 2; equals L sqrt(2 T log N) at the fixed-horizon
// rate when t = T.
double HedgeBound(int num_actions, int64_t t, double eta,
                  double utility_bound);
// Regret bound for the anytime schedule: 2L (sqrt(2 t log N) +
// sqrt(log N / 8)), the usual doubling-free guarantee rescaled from [0, 1]
// losses to utilities in [-L, L].
double AnytimeHedgeBound(int num_actions, int64_t t, double utility_bound);

// Running external regret max_i sum_t u^t_i - sum_t u^t . x^t.
class ExternalRegretTracker {
 public:
  explicit ExternalRegretTracker(int num_actions);

  void Record(std::span<const double> utility, std::span<const double> played);
  double Regret() const;
  int64_t iterations() const { return t_; }

 private:
  std::vector<double> utility_sum_;
  double realized_ = 0.0;
  int64_t t_ = 0;
};

// External regret of a played sequence. Throws InvalidArgument on an empty
// or ragged history.
double RealizedRegret(std::span<const std::vector<double>> utilities,
                      std::span<const std::vector<double>> played);

}  // namespace efg

#endif  // EFG_SIMPLEX_LEARNERS_H_
