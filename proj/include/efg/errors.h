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

#ifndef EFG_ERRORS_H_
#define EFG_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace efg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: dimension mismatches, out-of-range parameters, invalid
// solver configurations.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A structurally malformed game tree (cycles, dangling children, chance
// distributions that do not sum to one, inconsistent information sets).
class InvalidGame : public Error {
 public:
  using Error::Error;
};

// Two histories of one information set disagree on the acting player's own
// (infoset, action) sequence.
class PerfectRecallViolation : public Error {
 public:
  PerfectRecallViolation(int player, std::string infoset, std::string first,
                         std::string second)
      : Error("perfect recall violated at player " + std::to_string(player + 1) +
              " information set '" + infoset + "': member histories have own "
              "sequences [" + first + "] and [" + second + "]"),
        player_(player),
        infoset_(std::move(infoset)),
        first_sequence_(std::move(first)),
        second_sequence_(std::move(second)) {}

  int player() const { return player_; }
  const std::string& infoset() const { return infoset_; }
  const std::string& first_sequence() const { return first_sequence_; }
  const std::string& second_sequence() const { return second_sequence_; }

 private:
  int player_;
  std::string infoset_;
  std::string first_sequence_;
  std::string second_sequence_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

}  // namespace efg

#endif  // EFG_ERRORS_H_
