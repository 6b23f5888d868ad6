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

#include "efg/sampling.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <utility>

#include "efg/errors.h"
#include "efg/evaluation.h"
#include "efg/simplex_learners.h"

namespace efg {
namespace {

// Integer payoffs are kept well inside the exactly representable range.
constexpr double kMaxIntegerPayoff = 1e12;

uint32_t Low(uint64_t v) { return static_cast<uint32_t>(v & 0xffffffffu); }
uint32_t High(uint64_t v) { return static_cast<uint32_t>(v >> 32); }

int UniformIndex(size_t n, uint32_t key) {
  return static_cast<int>((static_cast<uint64_t>(key) * n) >> 32);
}

template <typename Weight>
std::vector<int> DrawActions(const Treeplex& treeplex,
                             std::span<const Weight> weights, int player,
                             SamplerStreams& streams) {
  std::vector<int> actions(treeplex.num_infosets());
  for (int i = 0; i < treeplex.num_infosets(); ++i) {
    const InfosetSequences& info = treeplex.infoset(i);
    const uint32_t key =
        DrawKey(streams.Stream(SamplerStreams::kPlanPurpose, player, i));
    const std::span<const Weight> w =
        weights.subspan(info.first_sequence, info.num_actions());
    if constexpr (std::is_same_v<Weight, int64_t>) {
      actions[i] = DrawFromCounts(w, key);
    } else {
      actions[i] = DrawFromWeights(w, key);
    }
  }
  return actions;
}

bool IsIntegral(double v) {
  return std::nearbyint(v) == v && std::abs(v) <= kMaxIntegerPayoff;
}

}  // namespace

std::mt19937_64& SamplerStreams::Stream(uint32_t purpose, int player,
                                        int infoset) {
  const auto key = std::make_tuple(purpose, player, infoset);
  auto it = streams_.find(key);
  if (it == streams_.end()) {
    std::seed_seq seq{Low(seed_), High(seed_), purpose,
                      static_cast<uint32_t>(player),
                      static_cast<uint32_t>(infoset)};
    it = streams_.emplace(key, std::mt19937_64(seq)).first;
  }
  return it->second;
}

int DrawFromWeights(std::span<const double> weights, uint32_t key) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) return UniformIndex(weights.size(), key);
  // 2^-32 scaling is exact, and so is the product for totals below 2^21.
  const double threshold = static_cast<double>(key) * total * 0x1p-32;
  double running = 0.0;
  for (size_t a = 0; a < weights.size(); ++a) {
    running += weights[a];
    if (running > threshold && weights[a] > 0.0) return static_cast<int>(a);
  }
  // Rounding can leave the threshold above the last partial sum.
  for (size_t a = weights.size(); a-- > 0;) {
    if (weights[a] > 0.0) return static_cast<int>(a);
  }
  return 0;
}

int DrawFromCounts(std::span<const int64_t> weights, uint32_t key) {
  int64_t total = 0;
  for (int64_t w : weights) total += w;
  if (total <= 0) return UniformIndex(weights.size(), key);
  const unsigned __int128 scaled =
      static_cast<unsigned __int128>(key) * static_cast<uint64_t>(total);
  const int64_t threshold = static_cast<int64_t>(scaled >> 32);
  int64_t running = 0;
  for (size_t a = 0; a < weights.size(); ++a) {
    running += weights[a];
    if (running > threshold) return static_cast<int>(a);
  }
  return static_cast<int>(weights.size()) - 1;
}

PureStrategy MakePureStrategy(const Treeplex& treeplex,
                              std::span<const int> actions) {
  if (static_cast<int>(actions.size()) != treeplex.num_infosets()) {
    throw InvalidArgument("pure strategy needs one action per infoset");
  }
  PureStrategy pure;
  pure.choice.probs.assign(treeplex.num_sequences(), 0.0);
  pure.choice.probs[kEmptySequence] = 1.0;
  for (int i = 0; i < treeplex.num_infosets(); ++i) {
    const InfosetSequences& info = treeplex.infoset(i);
    if (actions[i] < 0 || actions[i] >= info.num_actions()) {
      throw InvalidArgument("pure strategy action out of range");
    }
    pure.choice.probs[info.first_sequence + actions[i]] = 1.0;
  }
  pure.plan = BehavioralToRealization(treeplex, pure.choice);
  for (int s = 0; s < treeplex.num_sequences(); ++s) {
    if (pure.plan[s] > 0.0) pure.sequences.push_back(s);
  }
  return pure;
}

PureStrategy SamplePureStrategy(const Treeplex& treeplex,
                                std::span<const double> weights, int player,
                                SamplerStreams& streams) {
  if (static_cast<int>(weights.size()) != treeplex.num_sequences()) {
    throw InvalidArgument("sampling weights have the wrong dimension");
  }
  const std::vector<int> actions =
      DrawActions<double>(treeplex, weights, player, streams);
  return MakePureStrategy(treeplex, actions);
}

PureStrategy SampleOpponent(const Treeplex& treeplex,
                            std::span<const double> plan, int player,
                            SamplerStreams& streams) {
  ValidateRealizationPlan(treeplex, plan);
  const BehavioralStrategy b = RealizationToBehavioral(treeplex, plan);
  return SamplePureStrategy(treeplex, b.probs, player, streams);
}

ChanceDraw ChanceComponentScale(const SequenceFormGame& game, int component) {
  const std::vector<ChanceComponent>& parts = game.chance_components();
  if (component < 0 || component >= static_cast<int>(parts.size())) {
    throw InvalidArgument("chance component out of range");
  }
  if (game.uniform_root_chance()) return {component, 1.0};
  return {component,
          static_cast<double>(parts.size()) * parts[component].root_prob};
}

ChanceDraw SampleChanceComponent(const SequenceFormGame& game,
                                 SamplerStreams& streams) {
  const size_t p = game.chance_components().size();
  if (p == 1) return ChanceComponentScale(game, 0);
  const uint32_t key =
      DrawKey(streams.Stream(SamplerStreams::kChancePurpose, -1, -1));
  return ChanceComponentScale(game, UniformIndex(p, key));
}

SequenceVector SampledUtility(const SequenceFormGame& game, int player,
                              std::span<const int> opponent_sequences,
                              const ChanceDraw* chance) {
  const PayoffMatrix& a =
      chance ? game.chance_components().at(chance->component).conditional
             : game.payoff();
  const double scale = chance ? chance->scale : 1.0;
  SequenceVector u(game.num_sequences(player), 0.0);
  if (player == kRowPlayer) {
    for (int c : opponent_sequences) {
      a.ForEachInColumn(c, [&](const PayoffEntry& e) {
        u[e.row] += scale * e.value;
      });
    }
  } else {
    for (int r : opponent_sequences) {
      for (const PayoffEntry& e : a.row(r)) u[e.col] -= scale * e.value;
    }
  }
  return u;
}

SequenceVector ComponentUtility(const SequenceFormGame& game, int player,
                                std::span<const double> opponent,
                                const ChanceDraw& chance) {
  const PayoffMatrix& a =
      game.chance_components().at(chance.component).conditional;
  SequenceVector u =
      player == kRowPlayer ? a.Times(opponent) : a.TransposeTimes(opponent);
  const double scale = player == kRowPlayer ? chance.scale : -chance.scale;
  for (double& v : u) v *= scale;
  return u;
}

void ValidateSampledCfrOptions(const SequenceFormGame& game,
                               const SampledCfrOptions& options) {
  if (options.arithmetic != Arithmetic::kInteger) return;
  if (options.learner.learner != Learner::kRegretMatching) {
    throw InvalidArgument("integer arithmetic requires regret matching");
  }
  if (options.scheme != SamplingScheme::kOutcome) {
    throw InvalidArgument("integer arithmetic requires outcome sampling");
  }
  for (int i = 0; i < static_cast<int>(game.chance_components().size()); ++i) {
    const ChanceDraw draw = ChanceComponentScale(game, i);
    for (const PayoffEntry& e : game.chance_components()[i].conditional.entries()) {
      if (!IsIntegral(draw.scale * e.value)) {
        throw InvalidArgument(
            "integer arithmetic requires integral payoffs; chance outcome '" +
            game.chance_components()[i].outcome + "' has payoff " +
            std::to_string(draw.scale * e.value));
      }
    }
  }
}

double SampledRegretBound(const Treeplex& treeplex, double utility_bound,
                          int64_t iterations, double delta) {
  double root_actions = 0.0;
  for (const InfosetSequences& info : treeplex.infosets()) {
    root_actions += std::sqrt(static_cast<double>(info.num_actions()));
  }
  const double t = static_cast<double>(iterations);
  const double c = std::pow(utility_bound * root_actions, 2);
  return std::sqrt(c * t) +
         2.0 * utility_bound * std::sqrt(t / 2.0 * std::log(1.0 / delta));
}

SampledCfrResult RunSampledCfr(const SequenceFormGame& game,
                               const SampledCfrOptions& options_in,
                               int64_t iterations, const LogOptions& log,
                               IterateChoice iterate) {
  SampledCfrOptions options = options_in;
  ValidateSampledCfrOptions(game, options);
  if (options.learner.rate == RateSchedule::kFixedHorizon &&
      options.learner.horizon == 0) {
    options.learner.horizon = iterations;
  }
  const bool integer = options.arithmetic == Arithmetic::kInteger;
  const bool sampled_continuation =
      integer || options.continuation == Continuation::kSampled;
  const bool sample_plans =
      options.scheme == SamplingScheme::kOutcome || sampled_continuation;

  RunLog run_log(iterations, log);
  SamplerStreams streams(options.seed);
  // The learner's utilities are bounded by L times the chance scale.
  double scale_bound = 1.0;
  for (int i = 0; i < static_cast<int>(game.chance_components().size()); ++i) {
    scale_bound = std::max(scale_bound, ChanceComponentScale(game, i).scale);
  }
  const double bound = game.payoff_bound() * scale_bound;

  std::vector<RegretTable> tables;
  std::vector<SequenceRegretTracker> exact, sampled;
  std::array<std::vector<int64_t>, kNumPlayers> int_regrets, counts;
  std::array<SequenceVector, kNumPlayers> sums;
  for (int p = 0; p < kNumPlayers; ++p) {
    tables.emplace_back(game.treeplex(p), options.learner, bound);
    exact.emplace_back(game.treeplex(p));
    sampled.emplace_back(game.treeplex(p));
    int_regrets[p].assign(game.num_sequences(p), 0);
    counts[p].assign(game.num_sequences(p), 0);
    sums[p].assign(game.num_sequences(p), 0.0);
  }

  SampledCfrResult result;
  std::array<RealizationPlan, kNumPlayers> played;
  auto average = [&](int p, int64_t t) {
    RealizationPlan avg(game.num_sequences(p));
    for (size_t s = 0; s < avg.size(); ++s) {
      avg[s] = integer ? static_cast<double>(counts[p][s]) /
                             static_cast<double>(t)
                       : sums[p][s] / static_cast<double>(t);
    }
    return avg;
  };

  for (int64_t t = 1; t <= iterations; ++t) {
    std::array<BehavioralStrategy, kNumPlayers> policy;
    std::array<RealizationPlan, kNumPlayers> plan;
    std::array<PureStrategy, kNumPlayers> pure;
    for (int p = 0; p < kNumPlayers; ++p) {
      const Treeplex& tp = game.treeplex(p);
      if (integer) {
        std::vector<int64_t> w(int_regrets[p].size());
        for (size_t s = 0; s < w.size(); ++s) {
          w[s] = std::max<int64_t>(int_regrets[p][s], 0);
        }
        pure[p] = MakePureStrategy(
            tp, DrawActions<int64_t>(tp, w, p, streams));
        continue;
      }
      policy[p] = tables[p].Policy();
      plan[p] = BehavioralToRealization(tp, policy[p]);
      if (!sample_plans) continue;
      if (options.learner.learner == Learner::kRegretMatching) {
        std::vector<double> w(tables[p].values().size());
        for (size_t s = 0; s < w.size(); ++s) {
          w[s] = std::max(tables[p].values()[s], 0.0);
        }
        pure[p] = SamplePureStrategy(tp, w, p, streams);
      } else {
        pure[p] = SamplePureStrategy(tp, policy[p].probs, p, streams);
      }
    }
    const ChanceDraw draw = SampleChanceComponent(game, streams);

    std::array<SequenceVector, kNumPlayers> utility;
    for (int p = 0; p < kNumPlayers; ++p) {
      const int q = 1 - p;
      utility[p] = options.scheme == SamplingScheme::kOutcome
                       ? SampledUtility(game, p, pure[q].sequences, &draw)
                       : ComponentUtility(game, p, plan[q], draw);
    }
    for (int p = 0; p < kNumPlayers; ++p) {
      played[p] = integer ? pure[p].plan : plan[p];
    }
    for (int p = 0; p < kNumPlayers; ++p) {
      exact[p].Record(game.UtilityGradient(p, played[1 - p]), played[p]);
      sampled[p].Record(utility[p], sample_plans ? pure[p].plan : plan[p]);
      if (integer) {
        for (int s : pure[p].sequences) ++counts[p][s];
      } else {
        for (size_t s = 0; s < sums[p].size(); ++s) sums[p][s] += plan[p][s];
      }
    }

    for (int p = 0; p < kNumPlayers; ++p) {
      const Treeplex& tp = game.treeplex(p);
      if (integer) {
        // cf(I,a) = u(I,a) + value of the sampled continuation below (I,a).
        std::vector<int64_t> cf(utility[p].size());
        for (size_t s = 0; s < cf.size(); ++s) {
          cf[s] = static_cast<int64_t>(utility[p][s]);
        }
        for (int i = tp.num_infosets() - 1; i >= 0; --i) {
          const InfosetSequences& info = tp.infoset(i);
          int64_t value = 0;
          for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
            if (pure[p].choice.probs[s] > 0.0) value = cf[s];
          }
          cf[info.parent_sequence] += value;
          for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
            int_regrets[p][s] += cf[s] - value;
          }
        }
        continue;
      }
      std::vector<double> values;
      const BehavioralStrategy& own =
          sampled_continuation ? pure[p].choice : policy[p];
      const SequenceVector cf =
          CounterfactualUtilities(tp, utility[p], own, &values);
      tables[p].Update(cf, values);
    }

    if (!run_log.ShouldLog(t)) continue;
    ConvergenceRecord r;
    r.iteration = t;
    r.average_gap = NashGap(game, average(0, t), average(1, t)).gap;
    r.nash_gap = iterate == IterateChoice::kAverage
                     ? r.average_gap
                     : NashGap(game, played[0], played[1]).gap;
    for (int p = 0; p < kNumPlayers; ++p) {
      r.avg_regret[p] = exact[p].AverageRegret();
      double total = 0.0;
      for (const InfosetSequences& info : game.treeplex(p).infosets()) {
        total += RegretMatchingBound(info.num_actions(), t, bound);
      }
      r.bound[p] = integer ? total / static_cast<double>(t)
                           : tables[p].AverageRegretBound();
    }
    r.wall_ms = run_log.Lap();
    result.solver.records.push_back(r);
  }

  for (int p = 0; p < kNumPlayers; ++p) {
    result.sampled_regret[p] = sampled[p].Regret();
    result.regrets[p] = integer ? std::vector<double>(
                                      int_regrets[p].begin(), int_regrets[p].end())
                                : tables[p].values();
    result.integer_regrets[p] = int_regrets[p];
    result.counts[p] = counts[p];
  }
  result.solver.x_average = average(0, iterations);
  result.solver.y_average = average(1, iterations);
  result.solver.x_current = played[0];
  result.solver.y_current = played[1];
  return result;
}

}  // namespace efg
