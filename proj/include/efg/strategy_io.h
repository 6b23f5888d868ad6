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

#ifndef EFG_STRATEGY_IO_H_
#define EFG_STRATEGY_IO_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "efg/sequence_form.h"

namespace efg {

// Realization plans for zero, one or both players.
struct StrategyProfile {
  std::array<std::optional<RealizationPlan>, kNumPlayers> plans;
};

// "P<player>:<infoset>:<action>", e.g. "P1:K:b".
std::string SequenceId(const SequenceFormGame& game, int player, int sequence);

// One "<sequence id> <probability>" line per non-empty sequence in sequence
// order, probabilities printed with 17 significant digits. See
// docs/strategy_format.md.
std::string FormatStrategy(const SequenceFormGame& game,
                           const StrategyProfile& profile);

// Throws ParseError for unknown ids, duplicates, malformed numbers, missing
// sequences of a listed player, or plans violating the flow constraints.
StrategyProfile ParseStrategy(const SequenceFormGame& game,
                              std::string_view text);

StrategyProfile LoadStrategyFile(const SequenceFormGame& game,
                                 const std::string& path);
void WriteStrategyFile(const SequenceFormGame& game,
                       const StrategyProfile& profile,
                       const std::string& path);

}  // namespace efg

#endif  // EFG_STRATEGY_IO_H_
