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

#include "efg/simplex_learners.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "efg/errors.h"

namespace efg {
namespace {

// Rounding slack when comparing utilities against their declared bound.
constexpr double kBoundSlack = 1e-12;

void CheckSameSize(size_t a, size_t b, const char* what) {
  if (a != b) {
    throw InvalidArgument(std::string(what) + ": expected " +
                          std::to_string(a) + " entries, got " +
                          std::to_string(b));
  }
}

}  // namespace

CumulativeRegret::CumulativeRegret(int num_actions, double utility_bound)
    : regrets_(num_actions, 0.0), bound_(utility_bound) {
  if (num_actions < 1) throw InvalidArgument("need at least one action");
  if (!(utility_bound > 0.0)) {
    throw InvalidArgument("utility bound must be positive");
  }
}

void CumulativeRegret::RecordUtility(std::span<const double> utility,
                                     std::span<const double> played) {
  CheckSameSize(regrets_.size(), utility.size(), "utility");
  CheckSameSize(regrets_.size(), played.size(), "played distribution");
  double expected = 0.0;
  for (size_t i = 0; i < utility.size(); ++i) {
    if (!(std::abs(utility[i]) <= bound_ * (1.0 + kBoundSlack))) {
      throw InvalidArgument("utility " + std::to_string(utility[i]) +
                            " exceeds the declared bound " +
                            std::to_string(bound_));
    }
    expected += utility[i] * played[i];
  }
  for (size_t i = 0; i < utility.size(); ++i) {
    regrets_[i] += utility[i] - expected;
  }
  ++t_;
}

void RegretMatchingPolicy(std::span<const double> regrets,
                          std::span<double> policy) {
  double total = 0.0;
  for (double r : regrets) total += std::max(r, 0.0);
  const size_t n = regrets.size();
  for (size_t i = 0; i < n; ++i) {
    policy[i] = total > 0.0 ? std::max(regrets[i], 0.0) / total
                            : 1.0 / static_cast<double>(n);
  }
}

void HedgePolicy(std::span<const double> regrets, double eta,
                 std::span<double> policy) {
  const double top = *std::max_element(regrets.begin(), regrets.end());
  double total = 0.0;
  for (size_t i = 0; i < regrets.size(); ++i) {
    policy[i] = std::exp(eta * (regrets[i] - top));
    total += policy[i];
  }
  for (size_t i = 0; i < regrets.size(); ++i) policy[i] /= total;
}

std::vector<double> RegretMatchingNext(const CumulativeRegret& regret) {
  std::vector<double> policy(regret.num_actions());
  RegretMatchingPolicy(regret.regrets(), policy);
  return policy;
}

std::vector<double> HedgeNext(const CumulativeRegret& regret, double eta) {
  if (!(eta > 0.0)) throw InvalidArgument("hedge rate must be positive");
  std::vector<double> policy(regret.num_actions());
  HedgePolicy(regret.regrets(), eta, policy);
  return policy;
}

double FixedHorizonHedgeRate(int num_actions, int64_t horizon,
                             double utility_bound) {
  return AnytimeHedgeRate(num_actions, horizon, utility_bound);
}

double AnytimeHedgeRate(int num_actions, int64_t t, double utility_bound) {
  if (t < 1) throw InvalidArgument("hedge rate needs t >= 1");
  // With one action every rate plays the same point; keep eta positive.
  if (num_actions <= 1) return 1.0 / utility_bound;
  return std::sqrt(2.0 * std::log(static_cast<double>(num_actions)) /
                   static_cast<double>(t)) /
         utility_bound;
}

double RegretMatchingBound(int num_actions, int64_t t, double utility_bound) {
  return utility_bound *
         std::sqrt(static_cast<double>(num_actions) * static_cast<double>(t));
}

double HedgeBound(int num_actions, int64_t t, double eta,
                  double utility_bound) {
  if (num_actions <= 1) return 0.0;
  return std::log(static_cast<double>(num_actions)) / eta +
         eta * static_cast<double>(t) * utility_bound * utility_bound / 2.0;
}

double AnytimeHedgeBound(int num_actions, int64_t t, double utility_bound) {
  if (num_actions <= 1) return 0.0;
  const double log_n = std::log(static_cast<double>(num_actions));
  return 2.0 * utility_bound *
         (std::sqrt(2.0 * static_cast<double>(t) * log_n) +
          std::sqrt(log_n / 8.0));
}

ExternalRegretTracker::ExternalRegretTracker(int num_actions)
    : utility_sum_(num_actions, 0.0) {}

void ExternalRegretTracker::Record(std::span<const double> utility,
                                   std::span<const double> played) {
  CheckSameSize(utility_sum_.size(), utility.size(), "utility");
  CheckSameSize(utility_sum_.size(), played.size(), "played distribution");
  for (size_t i = 0; i < utility.size(); ++i) {
    utility_sum_[i] += utility[i];
    realized_ += utility[i] * played[i];
  }
  ++t_;
}

double ExternalRegretTracker::Regret() const {
  return *std::max_element(utility_sum_.begin(), utility_sum_.end()) -
         realized_;
}

double RealizedRegret(std::span<const std::vector<double>> utilities,
                      std::span<const std::vector<double>> played) {
  if (utilities.empty()) throw InvalidArgument("empty history");
  CheckSameSize(utilities.size(), played.size(), "history");
  ExternalRegretTracker tracker(static_cast<int>(utilities[0].size()));
  for (size_t t = 0; t < utilities.size(); ++t) {
    tracker.Record(utilities[t], played[t]);
  }
  return tracker.Regret();
}

}  // namespace efg
