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

#include "efg/dilated_prox.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "efg/errors.h"

namespace efg {

double EvalH(const Treeplex& treeplex, std::span<const double> plan) {
  if (static_cast<int>(plan.size()) != treeplex.num_sequences()) {
    throw InvalidArgument("entropy: plan has the wrong dimension");
  }
  double total = 0.0;
  for (const InfosetSequences& info : treeplex.infosets()) {
    const double parent = plan[info.parent_sequence];
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      if (plan[s] > 0.0) total += plan[s] * std::log(plan[s] / parent);
    }
  }
  return total;
}

DilatedDGF::DilatedDGF(Treeplex treeplex) : treeplex_(std::move(treeplex)) {}

double DilatedDGF::Evaluate(std::span<const double> plan) const {
  double value = EvalH(treeplex_, plan);
  if (recentered()) {
    for (size_t s = 0; s < plan.size(); ++s) {
      value -= center_gradient_[s] * plan[s];
    }
  }
  return value;
}

ProxResult DilatedDGF::SmoothedBestResponse(std::span<const double> gradient,
                                            double beta,
                                            BackupRule rule) const {
  if (!(beta > 0.0)) {
    throw InvalidArgument("smoothed best response needs beta > 0");
  }
  const int n = treeplex_.num_sequences();
  if (static_cast<int>(gradient.size()) != n) {
    throw InvalidArgument("smoothed best response: gradient has the wrong "
                          "dimension");
  }
  // z[s] starts as -g[s]/beta and collects the values of child infosets.
  std::vector<double> z(n);
  for (int s = 0; s < n; ++s) {
    z[s] = -gradient[s] / beta;
    if (center_log_) z[s] += (*center_log_)[s];
  }
  BehavioralStrategy behavioral;
  behavioral.probs.assign(n, 1.0);
  for (int i = treeplex_.num_infosets() - 1; i >= 0; --i) {
    const InfosetSequences& info = treeplex_.infoset(i);
    const auto first = z.begin() + info.first_sequence;
    const auto last = z.begin() + info.end_sequence();
    const double top = *std::max_element(first, last);
    double total = 0.0;
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      behavioral.probs[s] = std::exp(z[s] - top);
      total += behavioral.probs[s];
    }
    double expected = 0.0;
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      behavioral.probs[s] /= total;
      expected += behavioral.probs[s] * z[s];
    }
    z[info.parent_sequence] +=
        rule == BackupRule::kLogSumExp ? top + std::log(total) : expected;
  }
  ProxResult result;
  result.plan = BehavioralToRealization(treeplex_, behavioral);
  result.behavioral = std::move(behavioral);
  double linear = 0.0;
  for (int s = 0; s < n; ++s) linear += gradient[s] * result.plan[s];
  result.objective = linear + beta * Evaluate(result.plan);
  return result;
}

DilatedDGF DilatedDGF::Recenter(std::span<const double> center) const {
  const int n = treeplex_.num_sequences();
  if (static_cast<int>(center.size()) != n) {
    throw InvalidArgument("recenter: plan has the wrong dimension");
  }
  ValidateRealizationPlan(treeplex_, center);
  for (int s = 0; s < n; ++s) {
    if (!(center[s] > 0.0)) {
      throw InvalidArgument("recenter: plan is on the boundary at " +
                            treeplex_.sequence_name(s));
    }
  }
  const BehavioralStrategy b = RealizationToBehavioral(treeplex_, center);
  DilatedDGF out(treeplex_);
  std::vector<double> logs(n, 0.0);
  out.center_gradient_.assign(n, 0.0);
  for (int s = 1; s < n; ++s) {
    logs[s] = std::log(b.probs[s]);
    // d h / d x(I,a) = log(x(I,a)/x(parent)) + 1 - |child infosets of (I,a)|.
    out.center_gradient_[s] =
        logs[s] + 1.0 -
        static_cast<double>(treeplex_.child_infosets(s).size());
  }
  out.center_log_ = std::move(logs);
  return out;
}

std::vector<double> QuadraticProx(std::span<const double> regrets, int64_t t) {
  if (t < 1) throw InvalidArgument("quadratic prox needs t >= 1");
  const double scale = static_cast<double>(t);
  const size_t n = regrets.size();
  double beta = 0.0;
  for (double r : regrets) beta += std::max(r, 0.0);
  beta /= scale;
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  if (beta > 0.0) {
    for (size_t i = 0; i < n; ++i) {
      const double gbar = -regrets[i] / scale;
      x[i] = std::max(-gbar, 0.0) / beta;
    }
  }
  return x;
}

}  // namespace efg
