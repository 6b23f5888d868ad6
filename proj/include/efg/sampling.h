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

#ifndef EFG_SAMPLING_H_
#define EFG_SAMPLING_H_

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <tuple>
#include <vector>

#include "efg/cfr.h"
#include "efg/convergence.h"
#include "efg/sequence_form.h"

namespace efg {

// Random streams split by (purpose, player, information set). Each stream is
// a std::mt19937_64 seeded with std::seed_seq{seed_lo, seed_hi, purpose,
// player, infoset}, so what one information set draws never depends on how
// often another one was visited.
class SamplerStreams {
 public:
  static constexpr uint32_t kChancePurpose = 0;
  static constexpr uint32_t kPlanPurpose = 1;

  explicit SamplerStreams(uint64_t seed) : seed_(seed) {}

  std::mt19937_64& Stream(uint32_t purpose, int player, int infoset);

 private:
  uint64_t seed_;
  std::map<std::tuple<uint32_t, int, int>, std::mt19937_64> streams_;
};

// A 32-bit draw: the top half of one 64-bit output.
inline uint32_t DrawKey(std::mt19937_64& rng) {
  return static_cast<uint32_t>(rng() >> 32);
}

// Index of the first entry whose running sum exceeds key * total / 2^32;
// uniform over the entries when the total is zero. The float and integer
// versions pick the same index for integer-valued weights below 2^21.
int DrawFromWeights(std::span<const double> weights, uint32_t key);
int DrawFromCounts(std::span<const int64_t> weights, uint32_t key);

// A pure strategy: one action at every information set (as a 0/1
// behavioral strategy) and the sequences it realizes.
struct PureStrategy {
  BehavioralStrategy choice;
  std::vector<int> sequences;  // realized sequences, ascending, starting at 0
  RealizationPlan plan;        // 0/1 indicator of `sequences`
};

PureStrategy MakePureStrategy(const Treeplex& treeplex,
                              std::span<const int> actions);

// Draws one action per information set with probabilities proportional to
// `weights` (per sequence), from the player's plan streams.
PureStrategy SamplePureStrategy(const Treeplex& treeplex,
                                std::span<const double> weights, int player,
                                SamplerStreams& streams);

// Samples a pure plan distributed as the behavioral strategy of `plan`, so
// E[sampled indicator] = plan.
PureStrategy SampleOpponent(const Treeplex& treeplex,
                            std::span<const double> plan, int player,
                            SamplerStreams& streams);

// A_tilde = scale * conditional payoff of component i; with p components
// drawn uniformly, scale = p * P(i) and E[A_tilde] = A.
struct ChanceDraw {
  int component = 0;
  double scale = 1.0;
};

ChanceDraw ChanceComponentScale(const SequenceFormGame& game, int component);
ChanceDraw SampleChanceComponent(const SequenceFormGame& game,
                                 SamplerStreams& streams);

// Utility gradient of `player` when the opponent plays the pure plan
// `opponent` and payoffs come from `chance` (the full A when null). Touches
// only the payoff columns (or rows) of the opponent's realized sequences.
SequenceVector SampledUtility(const SequenceFormGame& game, int player,
                              std::span<const int> opponent_sequences,
                              const ChanceDraw* chance = nullptr);

// Utility gradient against a mixed opponent plan under one chance draw.
SequenceVector ComponentUtility(const SequenceFormGame& game, int player,
                                std::span<const double> opponent,
                                const ChanceDraw& chance);

enum class SamplingScheme {
  // Sample the opponent's pure plan and the root chance outcome.
  kOutcome,
  // Sample only the root chance outcome; exact over the players' plans.
  kChance,
};

enum class Arithmetic { kFloat, kInteger };

// How values of information sets below an action are folded into its
// counterfactual utility.
enum class Continuation {
  kExact,    // under the learner's own policy
  kSampled,  // under the player's own sampled pure strategy
};

struct SampledCfrOptions {
  SamplingScheme scheme = SamplingScheme::kOutcome;
  Arithmetic arithmetic = Arithmetic::kFloat;
  LearnerOptions learner;
  // Integer arithmetic always uses kSampled.
  Continuation continuation = Continuation::kExact;
  uint64_t seed = 0;
};

struct SampledCfrResult {
  SolverResult solver;
  // Realized regret of the sampled pure strategies against the sampled
  // utilities each player received (not divided by T).
  std::array<double, kNumPlayers> sampled_regret = {0.0, 0.0};
  // Final learner state: floating-point regrets (kFloat) or exact integer
  // regrets and action counts (kInteger).
  std::array<std::vector<double>, kNumPlayers> regrets;
  std::array<std::vector<int64_t>, kNumPlayers> integer_regrets;
  std::array<std::vector<int64_t>, kNumPlayers> counts;
};

// Throws InvalidArgument when integer arithmetic is combined with Hedge, the
// chance scheme, or payoffs that are not integral after chance scaling.
void ValidateSampledCfrOptions(const SequenceFormGame& game,
                               const SampledCfrOptions& options);

// CFR driven by sampled gradients. Averages are plain averages of the
// learners' plans (kFloat) or counts of the sampled pure plans (kInteger).
// The logged regrets are exact: each player's realized regret over its played
// plans against the opponent's played plans.
SampledCfrResult RunSampledCfr(const SequenceFormGame& game,
                               const SampledCfrOptions& options,
                               int64_t iterations, const LogOptions& log = {},
                               IterateChoice iterate = IterateChoice::kAverage);

// sqrt(C T) + 2 L sqrt(T/2 log(1/delta)) with C = (L sum_I sqrt|A(I)|)^2:
// the high-probability regret bound of sampled pure strategies following a
// counterfactual regret-matching learner whose utilities have sup norm L.
double SampledRegretBound(const Treeplex& treeplex, double utility_bound,
                          int64_t iterations, double delta);

}  // namespace efg

#endif  // EFG_SAMPLING_H_
