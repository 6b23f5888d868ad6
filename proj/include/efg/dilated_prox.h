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

#ifndef EFG_DILATED_PROX_H_
#define EFG_DILATED_PROX_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "efg/sequence_form.h"

namespace efg {

// How an information set reports its value to the parent sequence during the
// bottom-up softmax pass.
enum class BackupRule {
  // log sum_a exp(z_a): the exact prox. The pass then returns
  // argmin_x g.x + beta h(x).
  kLogSumExp,
  // sum_a sigma_a z_a: the expected child utility under the softmax policy,
  // the same accumulation a counterfactual regret pass performs.
  kExpectation,
};

struct ProxResult {
  RealizationPlan plan;
  BehavioralStrategy behavioral;
  // g.x + beta h'(x) at the returned plan, up to the constant that
  // recentering adds; exact for kLogSumExp only.
  double objective;
};

// The dilated negative entropy over one player's realization plans,
//   h(x) = sum_I sum_{a in A(I)} x(I,a) log(x(I,a) / x(parent(I))),
// optionally recentered at an interior plan x' as h(x) - grad h(x') . x.
class DilatedDGF {
 public:
  explicit DilatedDGF(Treeplex treeplex);

  const Treeplex& treeplex() const { return treeplex_; }
  bool recentered() const { return center_log_.has_value(); }

  // Value at a realization plan (0 log 0 = 0), including the linear
  // recentering term when present.
  double Evaluate(std::span<const double> plan) const;

  // argmin_{x} g.x + beta h(x). Throws InvalidArgument unless beta > 0.
  ProxResult SmoothedBestResponse(std::span<const double> gradient,
                                  double beta,
                                  BackupRule rule = BackupRule::kLogSumExp) const;

  // A copy whose prox at g = 0 is `center`. Throws InvalidArgument unless
  // every sequence of `center` is strictly positive.
  DilatedDGF Recenter(std::span<const double> center) const;

 private:
  Treeplex treeplex_;
  // log of the center's behavioral probabilities, per sequence.
  std::optional<std::vector<double>> center_log_;
  std::vector<double> center_gradient_;
};

// The un-recentered entropy, 0 log 0 = 0.
double EvalH(const Treeplex& treeplex, std::span<const double> plan);

// argmin_{x >= 0} gbar.x + beta ||x_+||^2 / 2 with gbar = -R/t and
// beta = e'R_+/t; the uniform distribution when R has no positive entry.
std::vector<double> QuadraticProx(std::span<const double> regrets, int64_t t);

}  // namespace efg

#endif  // EFG_DILATED_PROX_H_
