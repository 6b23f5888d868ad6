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


// Python bindings: games, evaluation, solvers and strategy files.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "efg/dilated_prox.h"
#include "efg/errors.h"
#include "efg/evaluation.h"
#include "efg/game_library.h"
#include "efg/harness.h"
#include "efg/oracles.h"
#include "efg/sequence_form.h"
#include "efg/strategy_io.h"

namespace py = pybind11;

namespace efg {
namespace {

// A loaded game: the tree and its sequence form.
class Game {
 public:
  explicit Game(GameTree tree)
      : tree_(std::move(tree)), game_(BuildSequenceForm(tree_)) {}

  const GameTree& tree() const { return tree_; }
  const SequenceFormGame& sf() const { return game_; }

  std::vector<std::string> SequenceNames(int player) const {
    CheckPlayer(player);
    std::vector<std::string> names;
    for (int s = 0; s < game_.num_sequences(player); ++s) {
      names.push_back(game_.treeplex(player).sequence_name(s));
    }
    return names;
  }

  static void CheckPlayer(int player) {
    if (player != 0 && player != 1) {
      throw InvalidArgument("player must be 0 or 1");
    }
  }

 private:
  GameTree tree_;
  SequenceFormGame game_;
};

void CheckSize(const Game& g, int player, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != g.sf().num_sequences(player)) {
    throw InvalidArgument("vector has the wrong dimension for player " +
                          std::to_string(player));
  }
}

py::dict Record(const ConvergenceRecord& r) {
  py::dict d;
  d["iteration"] = r.iteration;
  d["nash_gap"] = r.nash_gap;
  d["avg_regret_p1"] = r.avg_regret[0];
  d["avg_regret_p2"] = r.avg_regret[1];
  d["bound_p1"] = r.bound[0];
  d["bound_p2"] = r.bound[1];
  d["wall_ms"] = r.wall_ms;
  return d;
}

std::string SettingValue(const py::handle& value) {
  if (py::isinstance<py::bool_>(value)) {
    return value.cast<bool>() ? "true" : "false";
  }
  return py::str(value).cast<std::string>();
}

py::dict Solve(const Game& g, const std::string& algo, int64_t iters,
               const py::kwargs& kwargs) {
  Settings settings{{"algo", algo}, {"iters", std::to_string(iters)}};
  for (const auto& [key, value] : kwargs) {
    std::string k = key.cast<std::string>();
    for (char& c : k) {
      if (c == '_') c = '-';
    }
    settings[k] = SettingValue(value);
  }
  const RunConfig config = BuildRunConfig(settings);
  RunOutput out;
  {
    py::gil_scoped_release release;
    out = RunSolver(g.sf(), config);
  }
  py::list records;
  for (const ConvergenceRecord& r : out.solver.records) records.append(Record(r));
  py::dict result;
  result["x"] = out.x;
  result["y"] = out.y;
  result["records"] = records;
  result["csv"] = [&] {
    std::string csv = std::string(kCsvHeader) + "\n";
    for (const ConvergenceRecord& r : out.solver.records) {
      csv += FormatCsvRow(r) + "\n";
    }
    return csv;
  }();
  return result;
}

}  // namespace
}  // namespace efg

PYBIND11_MODULE(_efgsolve, m) {
  using namespace efg;
  m.doc() = "Solvers for two-player zero-sum extensive-form games.";

  // Translators run newest first, so bases are registered before subclasses.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument",
                                                         PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", invalid.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PerfectRecallViolation>(m, "PerfectRecallViolation",
                                                 PyExc_ValueError);

  py::class_<Game>(m, "Game")
      .def("num_sequences",
           [](const Game& g, int p) {
             Game::CheckPlayer(p);
             return g.sf().num_sequences(p);
           })
      .def("num_infosets",
           [](const Game& g, int p) {
             Game::CheckPlayer(p);
             return g.sf().treeplex(p).num_infosets();
           })
      .def("sequence_names", &Game::SequenceNames)
      .def_property_readonly("payoff_bound",
                             [](const Game& g) { return g.sf().payoff_bound(); })
      .def("uniform_plan",
           [](const Game& g, int p) {
             Game::CheckPlayer(p);
             return UniformPlan(g.sf().treeplex(p));
           })
      .def("is_realization_plan",
           [](const Game& g, int p, const std::vector<double>& plan) {
             Game::CheckPlayer(p);
             return plan.size() == static_cast<size_t>(g.sf().num_sequences(p)) &&
                    IsRealizationPlan(g.sf().treeplex(p), plan);
           })
      .def("utility_gradient",
           [](const Game& g, int p, const std::vector<double>& opponent) {
             Game::CheckPlayer(p);
             CheckSize(g, 1 - p, opponent);
             return g.sf().UtilityGradient(p, opponent);
           })
      .def("expected_value",
           [](const Game& g, const std::vector<double>& x,
              const std::vector<double>& y) {
             CheckSize(g, 0, x);
             CheckSize(g, 1, y);
             return ExpectedValue(g.sf(), x, y);
           })
      .def("nash_gap",
           [](const Game& g, const std::vector<double>& x,
              const std::vector<double>& y) {
             CheckSize(g, 0, x);
             CheckSize(g, 1, y);
             const NashGapReport r = NashGap(g.sf(), x, y);
             py::dict d;
             d["gap"] = r.gap;
             d["value"] = r.value;
             d["row_benefit"] = r.row_benefit;
             d["column_benefit"] = r.column_benefit;
             return d;
           })
      .def("best_response",
           [](const Game& g, int p, const std::vector<double>& opponent) {
             Game::CheckPlayer(p);
             CheckSize(g, 1 - p, opponent);
             const BestResponseResult r = BestResponse(g.sf(), p, opponent);
             return py::make_tuple(r.plan, r.value);
           },
           "Pure best response of player p and the resulting payoff to "
           "player 1.")
      .def("smoothed_best_response",
           [](const Game& g, int p, const std::vector<double>& gradient,
              double beta, bool recenter) {
             Game::CheckPlayer(p);
             CheckSize(g, p, gradient);
             DilatedDGF dgf(g.sf().treeplex(p));
             if (recenter) dgf = dgf.Recenter(UniformPlan(g.sf().treeplex(p)));
             const ProxResult r = dgf.SmoothedBestResponse(gradient, beta);
             return py::make_tuple(r.plan, r.objective);
           },
           py::arg("player"), py::arg("gradient"), py::arg("beta"),
           py::arg("recenter") = false,
           "argmin_x g.x + beta h(x) over the player's realization plans.")
      .def("game_value",
           [](const Game& g) { return GameValueByEnumeration(g.sf()); },
           "Exact value by linear programming over pure plans (small games).")
      .def("serialize", [](const Game& g) { return SerializeGame(g.tree()); })
      .def("format_strategy",
           [](const Game& g, std::optional<std::vector<double>> x,
              std::optional<std::vector<double>> y) {
             StrategyProfile profile;
             profile.plans[0] = std::move(x);
             profile.plans[1] = std::move(y);
             return FormatStrategy(g.sf(), profile);
           },
           py::arg("x") = py::none(), py::arg("y") = py::none())
      .def("parse_strategy",
           [](const Game& g, const std::string& text) {
             const StrategyProfile p = ParseStrategy(g.sf(), text);
             return py::make_tuple(p.plans[0], p.plans[1]);
           })
      .def("solve", &Solve, py::arg("algo") = "cfr-rm",
           py::arg("iters") = 1000,
           "Runs a solver. Keyword settings use the config keys with "
           "underscores (seed, eta, learner, beta_schedule, recenter, "
           "warm_start, t0, integer, scheme, alternating, iterate, "
           "log_stride, no_wall_clock).");

  m.def("builtin_game_names", &BuiltinGameNames);
  m.def("load_game",
        [](const std::string& name_or_path) {
          return Game(LoadGameByName(name_or_path));
        },
        "A builtin game by name, or a game file.");
  m.def("parse_game", [](const std::string& text) { return Game(LoadGame(text)); });
  m.def("run_checks", [](const std::string& name, uint64_t seed) {
    py::list out;
    for (const CheckResult& r : RunChecks(name, seed)) {
      out.append(py::make_tuple(r.name, r.pass, r.detail));
    }
    return out;
  }, py::arg("game"), py::arg("seed") = 0);
  m.attr("CSV_HEADER") = kCsvHeader;
}
