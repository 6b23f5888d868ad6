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

#ifndef EFG_GAME_LIBRARY_H_
#define EFG_GAME_LIBRARY_H_

#include <string>
#include <string_view>
#include <vector>

#include "efg/game_tree.h"

namespace efg {

// matching_pennies, rps, kuhn, chance_dice.
std::vector<std::string> BuiltinGameNames();
bool IsBuiltinGame(std::string_view name);
// Throws InvalidArgument for unknown names.
GameTree BuiltinGame(std::string_view name);

// Parses the line-oriented game format (see docs/game_format.md). Throws
// ParseError for malformed input and PerfectRecallViolation for games that
// are well formed but forget.
GameTree LoadGame(std::string_view text);
GameTree LoadGameFile(const std::string& path);

// A builtin name, or otherwise a path to a game file.
GameTree LoadGameByName(const std::string& name_or_path);

// Canonical text: nodes in preorder named n0, n1, ...; so two trees that
// differ only in node ids serialize identically.
std::string SerializeGame(const GameTree& tree);

}  // namespace efg

#endif  // EFG_GAME_LIBRARY_H_
