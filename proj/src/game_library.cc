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

#include "efg/game_library.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "efg/errors.h"

namespace efg {
namespace {

// Sequential 2x2 / 3x3 matrix game: player 2 does not observe player 1.
GameTree MatrixGame(const std::vector<std::string>& actions,
                    const std::vector<std::vector<double>>& payoff) {
  GameTreeBuilder b;
  const int root = b.AddDecision(kRowPlayer, "p1", actions);
  for (size_t i = 0; i < actions.size(); ++i) {
    const int reply = b.AddDecision(kColumnPlayer, "p2", actions);
    b.Connect(root, static_cast<int>(i), reply);
    for (size_t j = 0; j < actions.size(); ++j) {
      b.Connect(reply, static_cast<int>(j), b.AddTerminal(payoff[i][j]));
    }
  }
  return std::move(b).Build(root);
}

GameTree MatchingPennies() {
  return MatrixGame({"H", "T"}, {{1, -1}, {-1, 1}});
}

GameTree RockPaperScissors() {
  return MatrixGame({"R", "P", "S"}, {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
}

// Three-card Kuhn poker, ante 1, single bet of 1. Player 1 acts first.
GameTree KuhnPoker() {
  const std::string cards[] = {"J", "Q", "K"};
  GameTreeBuilder b;
  std::vector<std::string> deals;
  for (int c1 = 0; c1 < 3; ++c1) {
    for (int c2 = 0; c2 < 3; ++c2) {
      if (c1 != c2) deals.push_back(cards[c1] + cards[c2]);
    }
  }
  const int root = b.AddChance(deals, std::vector<double>(6, 1.0 / 6.0));
  int deal = 0;
  for (int c1 = 0; c1 < 3; ++c1) {
    for (int c2 = 0; c2 < 3; ++c2) {
      if (c1 == c2) continue;
      const double win = c1 > c2 ? 1.0 : -1.0;
      const int open = b.AddDecision(kRowPlayer, cards[c1], {"k", "b"});
      b.Connect(root, deal++, open);

      const int after_check = b.AddDecision(kColumnPlayer, cards[c2] + "|k",
                                            {"k", "b"});
      b.Connect(open, 0, after_check);
      b.Connect(after_check, 0, b.AddTerminal(win));
      const int facing_bet = b.AddDecision(kRowPlayer, cards[c1] + "|kb",
                                           {"f", "c"});
      b.Connect(after_check, 1, facing_bet);
      b.Connect(facing_bet, 0, b.AddTerminal(-1.0));
      b.Connect(facing_bet, 1, b.AddTerminal(2.0 * win));

      const int after_bet = b.AddDecision(kColumnPlayer, cards[c2] + "|b",
                                          {"f", "c"});
      b.Connect(open, 1, after_bet);
      b.Connect(after_bet, 0, b.AddTerminal(1.0));
      b.Connect(after_bet, 1, b.AddTerminal(2.0 * win));
    }
  }
  return std::move(b).Build(root);
}

// A fair three-sided die selects one of three payoff matrices. Player 1 sees
// the roll, player 2 sees neither the roll nor player 1's move.
GameTree ChanceDice() {
  const double payoff[3][2][2] = {
      {{3, -1}, {-2, 1}}, {{-1, 2}, {1, -2}}, {{0, -3}, {2, 1}}};
  GameTreeBuilder b;
  const int root = b.AddChance({"d1", "d2", "d3"},
                               std::vector<double>(3, 1.0 / 3.0));
  for (int d = 0; d < 3; ++d) {
    const int p1 = b.AddDecision(kRowPlayer, "d" + std::to_string(d + 1),
                                 {"a", "b"});
    b.Connect(root, d, p1);
    for (int i = 0; i < 2; ++i) {
      const int p2 = b.AddDecision(kColumnPlayer, "p2", {"l", "r"});
      b.Connect(p1, i, p2);
      for (int j = 0; j < 2; ++j) {
        b.Connect(p2, j, b.AddTerminal(payoff[d][i][j]));
      }
    }
  }
  return std::move(b).Build(root);
}

// ---------------------------------------------------------------------------
// Text format.

struct Record {
  int line = 0;
  std::string id;
  NodeKind kind = NodeKind::kTerminal;
  int player = -1;
  std::string infoset;
  std::vector<std::string> actions;
  std::vector<std::string> children;
  std::vector<double> probs;
  double utility = 0.0;
};

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '=' || c == '@' || c == ':' || c == '#' || c == ' ' ||
        c == '\t' || c == '\r') {
      return false;
    }
  }
  return true;
}

bool ParseDouble(std::string_view s, double* out) {
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, *out);
  return ec == std::errc() && ptr == end && std::isfinite(*out);
}

bool ParseProbability(std::string_view s, double* out) {
  const size_t slash = s.find('/');
  if (slash == std::string_view::npos) return ParseDouble(s, out) && *out >= 0;
  unsigned long long num = 0, den = 0;
  const std::string_view a = s.substr(0, slash), b = s.substr(slash + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), num);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), den);
  if (a.empty() || b.empty() || r1.ec != std::errc() ||
      r1.ptr != a.data() + a.size() || r2.ec != std::errc() ||
      r2.ptr != b.data() + b.size() || den == 0) {
    return false;
  }
  *out = static_cast<double>(num) / static_cast<double>(den);
  return true;
}

std::vector<std::string> Tokenize(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

Record ParseNode(const std::vector<std::string>& tok, int line) {
  if (tok.size() < 3) throw ParseError(line, "incomplete node record");
  Record r;
  r.line = line;
  r.id = tok[1];
  if (!IsIdentifier(r.id)) throw ParseError(line, "invalid node id '" + r.id + "'");
  const std::string& kind = tok[2];
  size_t first_edge = 3;
  if (kind == "terminal") {
    if (tok.size() != 4) throw ParseError(line, "terminal needs one utility");
    if (!ParseDouble(tok[3], &r.utility)) {
      throw ParseError(line, "invalid utility '" + tok[3] + "'");
    }
    return r;
  } else if (kind == "chance") {
    r.kind = NodeKind::kChance;
  } else if (kind == "p1" || kind == "p2") {
    r.kind = NodeKind::kDecision;
    r.player = kind == "p1" ? kRowPlayer : kColumnPlayer;
    if (tok.size() < 4) throw ParseError(line, "decision node needs an infoset");
    r.infoset = tok[3];
    if (!IsIdentifier(r.infoset)) {
      throw ParseError(line, "invalid infoset label '" + r.infoset + "'");
    }
    first_edge = 4;
  } else {
    throw ParseError(line, "unknown node kind '" + kind + "'");
  }
  if (tok.size() == first_edge) throw ParseError(line, "node has no actions");
  for (size_t k = first_edge; k < tok.size(); ++k) {
    const std::string& edge = tok[k];
    const size_t eq = edge.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line, "expected <action>=<child>, got '" + edge + "'");
    }
    std::string action = edge.substr(0, eq);
    std::string child = edge.substr(eq + 1);
    if (r.kind == NodeKind::kChance) {
      const size_t at = child.find('@');
      if (at == std::string::npos) {
        throw ParseError(line, "chance edge '" + edge + "' has no probability");
      }
      double p = 0.0;
      if (!ParseProbability(child.substr(at + 1), &p)) {
        throw ParseError(line, "invalid probability in '" + edge + "'");
      }
      r.probs.push_back(p);
      child = child.substr(0, at);
    }
    if (!IsIdentifier(action) || !IsIdentifier(child)) {
      throw ParseError(line, "invalid edge '" + edge + "'");
    }
    r.actions.push_back(std::move(action));
    r.children.push_back(std::move(child));
  }
  if (r.kind == NodeKind::kChance) {
    double total = 0.0;
    for (double p : r.probs) total += p;
    if (std::abs(total - 1.0) > kChanceSumTolerance) {
      throw ParseError(line, "chance probabilities sum to " +
                                 std::to_string(total) + ", not 1");
    }
  }
  return r;
}

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::string> BuiltinGameNames() {
  return {"matching_pennies", "rps", "kuhn", "chance_dice"};
}

bool IsBuiltinGame(std::string_view name) {
  for (const std::string& n : BuiltinGameNames()) {
    if (n == name) return true;
  }
  return false;
}

GameTree BuiltinGame(std::string_view name) {
  if (name == "matching_pennies") return MatchingPennies();
  if (name == "rps") return RockPaperScissors();
  if (name == "kuhn") return KuhnPoker();
  if (name == "chance_dice") return ChanceDice();
  throw InvalidArgument("unknown builtin game '" + std::string(name) + "'");
}

GameTree LoadGame(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Record> records;
  std::map<std::string, int> index;
  bool saw_header = false;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::vector<std::string> tok = Tokenize(line);
    if (tok.empty()) continue;
    if (!saw_header) {
      if (tok.size() != 2 || tok[0] != "efg") {
        throw ParseError(line_no, "expected header 'efg 1'");
      }
      if (tok[1] != "1") {
        throw ParseError(line_no, "unsupported format version " + tok[1]);
      }
      saw_header = true;
      continue;
    }
    if (tok[0] != "node") {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
    Record r = ParseNode(tok, line_no);
    if (!index.emplace(r.id, static_cast<int>(records.size())).second) {
      throw ParseError(line_no, "node '" + r.id + "' defined twice");
    }
    records.push_back(std::move(r));
  }
  if (!saw_header) throw ParseError(line_no, "missing header 'efg 1'");
  if (records.empty()) throw ParseError(line_no, "no nodes");

  std::vector<int> parent(records.size(), -1);
  for (size_t i = 0; i < records.size(); ++i) {
    for (const std::string& child : records[i].children) {
      auto it = index.find(child);
      if (it == index.end()) {
        throw ParseError(records[i].line, "child '" + child + "' is not defined");
      }
      if (it->second == 0) {
        throw ParseError(records[i].line, "the root cannot be a child");
      }
      if (parent[it->second] >= 0) {
        throw ParseError(records[i].line,
                         "node '" + child + "' has two parents");
      }
      parent[it->second] = static_cast<int>(i);
    }
  }
  // With single parents and a parentless root, a node is reachable iff its
  // parent chain ends at the root.
  for (size_t i = 1; i < records.size(); ++i) {
    size_t steps = 0;
    int at = static_cast<int>(i);
    while (at > 0 && steps <= records.size()) {
      at = parent[at];
      ++steps;
    }
    if (at != 0) {
      throw ParseError(records[i].line,
                       "node '" + records[i].id + "' is not reachable from the root");
    }
  }

  std::map<std::pair<int, std::string>, const Record*> infosets;
  std::vector<Node> nodes;
  nodes.reserve(records.size());
  for (const Record& r : records) {
    if (r.kind == NodeKind::kDecision) {
      auto [it, inserted] = infosets.emplace(std::pair(r.player, r.infoset), &r);
      if (!inserted && it->second->actions != r.actions) {
        throw ParseError(r.line, "information set '" + r.infoset +
                                     "' was declared with different actions on line " +
                                     std::to_string(it->second->line));
      }
    }
    Node node;
    node.kind = r.kind;
    node.player = r.player;
    node.infoset_label = r.infoset;
    node.actions = r.actions;
    node.chance_probs = r.probs;
    node.utility = r.utility;
    for (const std::string& child : r.children) {
      node.children.push_back(index.at(child));
    }
    nodes.push_back(std::move(node));
  }
  GameTree tree(std::move(nodes), 0);
  ValidatePerfectRecall(tree);
  return tree;
}

GameTree LoadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open game file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadGame(buffer.str());
}

GameTree LoadGameByName(const std::string& name_or_path) {
  if (IsBuiltinGame(name_or_path)) return BuiltinGame(name_or_path);
  return LoadGameFile(name_or_path);
}

std::string SerializeGame(const GameTree& tree) {
  std::vector<int> name(tree.num_nodes(), -1);
  int next = 0;
  for (int id : tree.preorder()) name[id] = next++;
  auto id_of = [&](int node) { return "n" + std::to_string(name[node]); };

  std::string out = "efg 1\n";
  for (int id : tree.preorder()) {
    const Node& node = tree.node(id);
    out += "node " + id_of(id) + " ";
    switch (node.kind) {
      case NodeKind::kTerminal:
        out += "terminal " + FormatNumber(node.utility);
        break;
      case NodeKind::kChance:
        out += "chance";
        for (size_t a = 0; a < node.actions.size(); ++a) {
          out += " " + node.actions[a] + "=" + id_of(node.children[a]) + "@" +
                 FormatNumber(node.chance_probs[a]);
        }
        break;
      case NodeKind::kDecision:
        out += (node.player == kRowPlayer ? "p1 " : "p2 ") + node.infoset_label;
        for (size_t a = 0; a < node.actions.size(); ++a) {
          out += " " + node.actions[a] + "=" + id_of(node.children[a]);
        }
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace efg
