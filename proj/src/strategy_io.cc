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

#include "efg/strategy_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "efg/errors.h"

namespace efg {

std::string SequenceId(const SequenceFormGame& game, int player,
                       int sequence) {
  return "P" + std::to_string(player + 1) + ":" +
         game.treeplex(player).sequence_name(sequence);
}

std::string FormatStrategy(const SequenceFormGame& game,
                           const StrategyProfile& profile) {
  std::string out = "# efgsolve strategy v1\n";
  char buf[32];
  for (int p = 0; p < kNumPlayers; ++p) {
    if (!profile.plans[p]) continue;
    const RealizationPlan& plan = *profile.plans[p];
    if (static_cast<int>(plan.size()) != game.num_sequences(p)) {
      throw InvalidArgument("strategy has the wrong dimension");
    }
    for (int s = 1; s < game.num_sequences(p); ++s) {
      std::snprintf(buf, sizeof(buf), "%.17g", plan[s]);
      out += SequenceId(game, p, s) + " " + buf + "\n";
    }
  }
  return out;
}

StrategyProfile ParseStrategy(const SequenceFormGame& game,
                              std::string_view text) {
  std::map<std::string, std::pair<int, int>> ids;
  for (int p = 0; p < kNumPlayers; ++p) {
    for (int s = 1; s < game.num_sequences(p); ++s) {
      ids.emplace(SequenceId(game, p, s), std::make_pair(p, s));
    }
  }
  StrategyProfile profile;
  std::array<std::vector<bool>, kNumPlayers> seen;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream fields(line.substr(0, line.find('#')));
    std::string id, value, extra;
    if (!(fields >> id)) continue;
    if (!(fields >> value) || (fields >> extra)) {
      throw ParseError(line_no, "expected '<sequence id> <probability>'");
    }
    const auto it = ids.find(id);
    if (it == ids.end()) {
      throw ParseError(line_no, "unknown sequence id '" + id + "'");
    }
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size() ||
        !std::isfinite(v)) {
      throw ParseError(line_no, "invalid probability '" + value + "'");
    }
    const auto [p, s] = it->second;
    if (!profile.plans[p]) {
      profile.plans[p] = RealizationPlan(game.num_sequences(p), 0.0);
      (*profile.plans[p])[kEmptySequence] = 1.0;
      seen[p].assign(game.num_sequences(p), false);
    }
    if (seen[p][s]) throw ParseError(line_no, "duplicate sequence '" + id + "'");
    seen[p][s] = true;
    (*profile.plans[p])[s] = v;
  }
  for (int p = 0; p < kNumPlayers; ++p) {
    if (!profile.plans[p]) continue;
    for (int s = 1; s < game.num_sequences(p); ++s) {
      if (!seen[p][s]) {
        throw ParseError(line_no, "missing sequence '" +
                                      SequenceId(game, p, s) + "'");
      }
    }
    try {
      ValidateRealizationPlan(game.treeplex(p), *profile.plans[p]);
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, "player " + std::to_string(p + 1) + ": " +
                                    e.what());
    }
  }
  return profile;
}

StrategyProfile LoadStrategyFile(const SequenceFormGame& game,
                                 const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open strategy file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseStrategy(game, buffer.str());
}

void WriteStrategyFile(const SequenceFormGame& game,
                       const StrategyProfile& profile,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write strategy file '" + path + "'");
  out << FormatStrategy(game, profile);
  if (!out) throw Error("failed writing strategy file '" + path + "'");
}

}  // namespace efg
