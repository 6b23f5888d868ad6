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


// efgsolve: solve, compare and check two-player zero-sum extensive-form
// games from the command line.
//
//   efgsolve solve --game kuhn --algo cfr-rm --iters 10000 --out conv.csv
//   efgsolve compare --game kuhn --algo cfr-rm,da --iters 1000
//   efgsolve check --game kuhn
//
// Exit codes: 0 success, 1 runtime failure or failed check, 2 bad arguments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "efg/errors.h"
#include "efg/game_library.h"
#include "efg/harness.h"
#include "efg/strategy_io.h"

namespace {

constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;

// Long flags that map one-to-one onto config keys.
const char* const kValueKeys[] = {
    "game",   "iters",   "seed",      "eta",        "learner",
    "beta-schedule",     "warm-start", "t0",        "scheme",
    "iterate", "log-stride", "out",    "strategy-out"};
const char* const kFlagKeys[] = {"recenter", "integer", "alternating",
                                 "no-wall-clock"};

struct FlagSet {
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::map<std::string, CLI::Option*> options;
  std::string config;

  void Register(CLI::App* app, bool with_outputs) {
    for (const char* key : kValueKeys) {
      const std::string k = key;
      if (!with_outputs && (k == "out" || k == "strategy-out")) continue;
      options[k] = app->add_option("--" + k, values[k]);
    }
    for (const char* key : kFlagKeys) {
      options[key] = app->add_flag("--" + std::string(key), flags[key]);
    }
    app->add_option("--config", config, "key=value settings file")
        ->check(CLI::ExistingFile);
  }

  // Flags given on the command line, as settings.
  efg::Settings Given() const {
    efg::Settings s;
    for (const auto& [k, opt] : options) {
      if (opt->count() == 0) continue;
      auto v = values.find(k);
      s[k] = v != values.end() ? v->second : "true";
    }
    return s;
  }
};

efg::Settings Merge(efg::Settings base, const efg::Settings& over) {
  for (const auto& [k, v] : over) base[k] = v;
  return base;
}

void WriteCsv(const std::string& path,
              const std::vector<efg::ConvergenceRecord>& records) {
  if (path.empty()) {
    efg::WriteConvergenceCsv(records, std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw efg::Error("cannot write '" + path + "'");
  efg::WriteConvergenceCsv(records, out);
  if (!out) throw efg::Error("failed writing '" + path + "'");
}

int Solve(const FlagSet& flags, const std::string& algo) {
  efg::Settings settings;
  if (!flags.config.empty()) settings = efg::LoadConfigFile(flags.config);
  settings = Merge(settings, flags.Given());
  if (!algo.empty()) settings["algo"] = algo;
  const efg::RunConfig config = efg::BuildRunConfig(settings);
  const efg::SequenceFormGame game =
      efg::BuildSequenceForm(efg::LoadGameByName(config.game));
  const efg::RunOutput result = efg::RunSolver(game, config);
  WriteCsv(config.out, result.solver.records);
  if (!config.strategy_out.empty()) {
    efg::StrategyProfile profile;
    profile.plans[efg::kRowPlayer] = result.x;
    profile.plans[efg::kColumnPlayer] = result.y;
    efg::WriteStrategyFile(game, profile, config.strategy_out);
  }
  if (!result.solver.records.empty()) {
    std::fprintf(stderr, "%s on %s: nash gap %.6g after %lld iterations\n",
                 efg::AlgorithmName(config.algorithm).c_str(),
                 config.game.c_str(), result.solver.records.back().nash_gap,
                 static_cast<long long>(config.iterations));
  }
  return 0;
}

int Compare(const FlagSet& flags, const std::vector<std::string>& algos,
            const std::vector<std::string>& files, const std::string& out) {
  efg::Settings common;
  if (!flags.config.empty()) common = efg::LoadConfigFile(flags.config);
  common = Merge(common, flags.Given());
  std::vector<efg::RunConfig> configs;
  for (const std::string& file : files) {
    configs.push_back(efg::BuildRunConfig(
        Merge(efg::LoadConfigFile(file), flags.Given())));
  }
  for (const std::string& algo : algos) {
    efg::Settings s = common;
    s["algo"] = algo;
    configs.push_back(efg::BuildRunConfig(s));
  }
  if (out.empty()) {
    efg::CompareRuns(configs, std::cout);
    return 0;
  }
  std::ofstream stream(out, std::ios::binary);
  if (!stream) throw efg::Error("cannot write '" + out + "'");
  efg::CompareRuns(configs, stream);
  return stream ? 0 : kRuntimeError;
}

int Check(const std::vector<std::string>& games, uint64_t seed) {
  std::vector<std::string> names = games;
  if (names.empty()) names = efg::BuiltinGameNames();
  int failures = 0;
  for (const std::string& name : names) {
    for (const efg::CheckResult& r : efg::RunChecks(name, seed)) {
      std::printf("%s [%s] %s: %s\n", r.pass ? "PASS" : "FAIL", name.c_str(),
                  r.name.c_str(), r.detail.c_str());
      if (!r.pass) ++failures;
    }
  }
  std::fflush(stdout);
  if (failures > 0) {
    std::fprintf(stderr, "%d check(s) failed\n", failures);
    return kRuntimeError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers for two-player zero-sum extensive-form games"};
  app.require_subcommand(1);

  FlagSet solve_flags;
  std::string solve_algo;
  CLI::App* solve = app.add_subcommand("solve", "Run one solver");
  solve->add_option("--algo", solve_algo,
                    "cfr-rm, cfr-hedge, cfr-br, da or sampled-cfr");
  solve_flags.Register(solve, /*with_outputs=*/true);

  FlagSet compare_flags;
  std::vector<std::string> compare_algos;
  std::vector<std::string> compare_files;
  std::string compare_out;
  CLI::App* compare =
      app.add_subcommand("compare", "Run several solvers into one table");
  compare->add_option("--algo", compare_algos, "algorithms (repeat or comma)")
      ->delimiter(',');
  compare->add_option("configs", compare_files, "config files")
      ->check(CLI::ExistingFile);
  compare->add_option("--out", compare_out, "merged CSV path");
  compare_flags.Register(compare, /*with_outputs=*/false);

  std::vector<std::string> check_games;
  uint64_t check_seed = 0;
  CLI::App* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_option("--game", check_games, "games (default: all builtins)");
  check->add_option("--seed", check_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*solve) return Solve(solve_flags, solve_algo);
    if (*compare) {
      return Compare(compare_flags, compare_algos, compare_files, compare_out);
    }
    return Check(check_games, check_seed);
  } catch (const efg::ConfigError& e) {
    std::fprintf(stderr, "efgsolve: %s\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "efgsolve: %s\n", e.what());
    return kRuntimeError;
  }
}
