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


#include <string>

#include "efg/errors.h"
#include "efg/game_library.h"
#include "efg/sequence_form.h"
#include "gtest/gtest.h"

namespace efg {
namespace {

int ErrorLine(const std::string& text) {
  try {
    LoadGame(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(GameLibraryTest, BuiltinsRoundTripThroughTheFileFormat) {
  for (const std::string& name : BuiltinGameNames()) {
    const GameTree tree = BuiltinGame(name);
    const std::string text = SerializeGame(tree);
    const GameTree back = LoadGame(text);
    EXPECT_EQ(SerializeGame(back), text) << name;
    const SequenceFormGame a = BuildSequenceForm(tree);
    const SequenceFormGame b = BuildSequenceForm(back);
    EXPECT_EQ(a.payoff().entries(), b.payoff().entries()) << name;
    for (int p = 0; p < kNumPlayers; ++p) {
      ASSERT_EQ(a.num_sequences(p), b.num_sequences(p));
      for (int s = 0; s < a.num_sequences(p); ++s) {
        EXPECT_EQ(a.treeplex(p).sequence_name(s),
                  b.treeplex(p).sequence_name(s));
      }
    }
  }
}

TEST(GameLibraryTest, UnknownBuiltin) {
  EXPECT_FALSE(IsBuiltinGame("leduc"));
  EXPECT_THROW(BuiltinGame("leduc"), InvalidArgument);
}

TEST(GameLibraryTest, ParsesFractionsAndComments) {
  const GameTree tree = LoadGame(
      "efg 1  # header\n"
      "\n"
      "node r chance a=x@1/3 b=y@2/3\n"
      "node x terminal 1\n"
      "node y p1 i l=t1 r=t2\n"
      "node t1 terminal -2.5\n"
      "node t2 terminal 0\n");
  EXPECT_EQ(tree.num_terminals(), 3);
  EXPECT_DOUBLE_EQ(tree.node(tree.root()).chance_probs[1], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(tree.max_abs_utility(), 2.5);
}

TEST(GameLibraryTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(ErrorLine("efg 2\n"), 1);
  EXPECT_EQ(ErrorLine("efg 1\nnode r p1 i a=x b=x\nnode x terminal 0\n"), 2);
  EXPECT_EQ(ErrorLine("efg 1\nnode r p1 i a=x\nnode x terminal 0\n"
                      "node x terminal 1\n"),
            4);
  EXPECT_EQ(ErrorLine("efg 1\nnode r p1 i a=x b=y\nnode x terminal 0\n"), 2);
  EXPECT_EQ(ErrorLine("efg 1\nnode r chance a=x@0.5 b=y@0.4\n"
                      "node x terminal 0\nnode y terminal 0\n"),
            2);
  EXPECT_EQ(ErrorLine("efg 1\nnode r p1 i a=x b=y\nnode x p2 j c=u\n"
                      "node y p2 j d=v\nnode u terminal 0\nnode v terminal 0\n"),
            4);
  EXPECT_EQ(ErrorLine("efg 1\nnode r terminal 0\nnode z terminal 1\n"), 3);
  EXPECT_EQ(ErrorLine("efg 1\nnode r p3 i a=x\nnode x terminal 0\n"), 2);
  EXPECT_EQ(ErrorLine("efg 1\nnode r terminal abc\n"), 2);
}

TEST(GameLibraryTest, RejectsImperfectRecallFiles) {
  EXPECT_THROW(LoadGame("efg 1\n"
                        "node r p1 a l=x r=y\n"
                        "node x p1 b u=t1 v=t2\n"
                        "node y p1 b u=t3 v=t4\n"
                        "node t1 terminal 1\nnode t2 terminal 0\n"
                        "node t3 terminal 0\nnode t4 terminal 1\n"),
               PerfectRecallViolation);
}

TEST(GameLibraryTest, MissingFile) {
  EXPECT_THROW(LoadGameFile("/nonexistent/game.efg"), Error);
}

}  // namespace
}  // namespace efg
