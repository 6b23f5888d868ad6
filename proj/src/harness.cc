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

#include "efg/harness.h"

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <random>
#include <sstream>
#include <utility>

#include "efg/dilated_prox.h"
#include "efg/evaluation.h"
#include "efg/game_library.h"
#include "efg/oracles.h"
#include "efg/simplex_learners.h"
#include "efg/strategy_io.h"

namespace efg {
namespace {

std::string Trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int64_t ParseInt(const std::string& key, const std::string& value,
                 int64_t minimum) {
  int64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || v < minimum) {
    throw ConfigError(key + ": expected an integer >= " +
                      std::to_string(minimum) + ", got '" + value + "'");
  }
  return v;
}

double ParsePositive(const std::string& key, const std::string& value) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() ||
      !(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a positive number, got '" + value +
                      "'");
  }
  return v;
}

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value.empty()) return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + value + "'");
}

StepSchedule ParseBetaSchedule(const std::string& text) {
  const size_t colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? "" : text.substr(colon + 1);
  StepSchedule schedule;
  if (kind == "sqrt" || kind == "constant") {
    schedule.kind =
        kind == "sqrt" ? StepKind::kInverseSqrt : StepKind::kConstant;
    if (!arg.empty()) schedule.scale = ParsePositive("beta-schedule", arg);
  } else if (kind == "hedge") {
    schedule.kind = StepKind::kHedge;
    schedule.eta = ParsePositive("beta-schedule", arg);
  } else {
    throw ConfigError("beta-schedule: expected sqrt[:c], constant[:c] or "
                      "hedge:<eta>, got '" + text + "'");
  }
  return schedule;
}

LearnerOptions HedgeOptions(const std::string& eta) {
  LearnerOptions options;
  options.learner = Learner::kHedge;
  if (eta == "anytime") {
    options.rate = RateSchedule::kAnytime;
  } else if (eta == "horizon") {
    options.rate = RateSchedule::kFixedHorizon;
  } else {
    options.rate = RateSchedule::kConstant;
    options.eta = ParsePositive("eta", eta);
  }
  return options;
}

std::string ResolvedLearner(const RunConfig& c) {
  if (!c.learner.empty()) return c.learner;
  return c.algorithm == Algorithm::kCfrBr ? "hedge" : "rm";
}

LearnerOptions LearnerFor(const RunConfig& c) {
  if (c.algorithm == Algorithm::kCfrHedge || ResolvedLearner(c) == "hedge") {
    if (c.algorithm != Algorithm::kCfrRm) return HedgeOptions(c.eta);
  }
  return LearnerOptions{};
}

void ApplySetting(RunConfig& c, const std::string& key,
                  const std::string& value) {
  if (key == "game") {
    if (value.empty()) throw ConfigError("game: empty name");
    c.game = value;
  } else if (key == "algo") {
    c.algorithm = ParseAlgorithm(value);
  } else if (key == "iters") {
    c.iterations = ParseInt(key, value, 1);
  } else if (key == "seed") {
    uint64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw ConfigError("seed: expected a nonnegative integer, got '" + value +
                        "'");
    }
    c.seed = v;
  } else if (key == "eta") {
    if (value != "anytime" && value != "horizon") ParsePositive(key, value);
    c.eta = value;
  } else if (key == "learner") {
    if (value != "rm" && value != "hedge") {
      throw ConfigError("learner: expected rm or hedge, got '" + value + "'");
    }
    c.learner = value;
  } else if (key == "beta-schedule") {
    ParseBetaSchedule(value);
    c.beta_schedule = value;
  } else if (key == "recenter") {
    c.recenter = ParseBool(key, value);
  } else if (key == "warm-start") {
    c.warm_start = value;
  } else if (key == "t0") {
    c.t0 = ParseInt(key, value, 1);
  } else if (key == "integer") {
    c.integer = ParseBool(key, value);
  } else if (key == "scheme") {
    if (value == "outcome") {
      c.scheme = SamplingScheme::kOutcome;
    } else if (value == "chance") {
      c.scheme = SamplingScheme::kChance;
    } else {
      throw ConfigError("scheme: expected outcome or chance, got '" + value +
                        "'");
    }
  } else if (key == "alternating") {
    c.alternating = ParseBool(key, value);
  } else if (key == "iterate") {
    if (value == "average") {
      c.iterate = IterateChoice::kAverage;
    } else if (value == "current") {
      c.iterate = IterateChoice::kCurrent;
    } else {
      throw ConfigError("iterate: expected average or current, got '" +
                        value + "'");
    }
  } else if (key == "log-stride") {
    c.log_stride = ParseInt(key, value, 0);
  } else if (key == "no-wall-clock") {
    c.wall_clock = !ParseBool(key, value);
  } else if (key == "out") {
    c.out = value;
  } else if (key == "strategy-out") {
    c.strategy_out = value;
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

LogOptions LogFor(const RunConfig& c) {
  return LogOptions{c.log_stride, c.wall_clock};
}

}  // namespace

std::string AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kCfrRm:
      return "cfr-rm";
    case Algorithm::kCfrHedge:
      return "cfr-hedge";
    case Algorithm::kCfrBr:
      return "cfr-br";
    case Algorithm::kDa:
      return "da";
    case Algorithm::kSampledCfr:
      return "sampled-cfr";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kCfrRm, Algorithm::kCfrHedge,
                      Algorithm::kCfrBr, Algorithm::kDa,
                      Algorithm::kSampledCfr}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected cfr-rm, cfr-hedge, cfr-br, da or "
                    "sampled-cfr)");
}

Settings ParseConfigText(std::string_view text) {
  Settings settings;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string body = Trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key=value");
    }
    settings[Trim(body.substr(0, eq))] = Trim(body.substr(eq + 1));
  }
  return settings;
}

Settings LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfigText(buffer.str());
}

RunConfig BuildRunConfig(const Settings& settings, RunConfig base) {
  for (const auto& [key, value] : settings) ApplySetting(base, key, value);
  ValidateRunConfig(base);
  return base;
}

void ValidateRunConfig(const RunConfig& c) {
  const std::string algo = AlgorithmName(c.algorithm);
  const bool sampled = c.algorithm == Algorithm::kSampledCfr;
  const bool uses_learner =
      c.algorithm == Algorithm::kCfrBr || c.algorithm == Algorithm::kSampledCfr;
  if (c.iterations < 1) throw ConfigError("iters must be at least 1");
  if (!c.learner.empty() && !uses_learner) {
    throw ConfigError("learner applies to cfr-br and sampled-cfr, not " + algo);
  }
  const bool hedge = c.algorithm == Algorithm::kCfrHedge ||
                     (uses_learner && ResolvedLearner(c) == "hedge");
  if (c.eta != "anytime" && !hedge) {
    throw ConfigError("eta applies only to hedge learners");
  }
  if (c.integer) {
    if (!sampled) throw ConfigError("integer arithmetic requires sampled-cfr");
    if (ResolvedLearner(c) != "rm") {
      throw ConfigError("integer arithmetic requires regret matching");
    }
    if (c.scheme != SamplingScheme::kOutcome) {
      throw ConfigError("integer arithmetic requires outcome sampling");
    }
  }
  if (c.scheme != SamplingScheme::kOutcome && !sampled) {
    throw ConfigError("scheme applies only to sampled-cfr");
  }
  if (c.alternating && c.algorithm != Algorithm::kCfrRm &&
      c.algorithm != Algorithm::kCfrHedge) {
    throw ConfigError("alternating updates apply to cfr-rm and cfr-hedge");
  }
  if (c.algorithm != Algorithm::kDa) {
    if (!c.warm_start.empty()) {
      throw ConfigError("warm-start applies only to da");
    }
    if (c.beta_schedule != "sqrt" || c.recenter) {
      throw ConfigError("beta-schedule and recenter apply only to da");
    }
  }
  if (c.t0 != 1 && c.warm_start.empty()) {
    throw ConfigError("t0 requires warm-start");
  }
}

RunOutput RunSolver(const SequenceFormGame& game, const RunConfig& c) {
  ValidateRunConfig(c);
  RunOutput out;
  switch (c.algorithm) {
    case Algorithm::kCfrRm:
    case Algorithm::kCfrHedge: {
      CfrOptions options;
      options.learner = LearnerFor(c);
      options.mode =
          c.alternating ? UpdateMode::kAlternating : UpdateMode::kSimultaneous;
      out.solver = RunCfr(game, options, c.iterations, LogFor(c), c.iterate);
      break;
    }
    case Algorithm::kCfrBr: {
      CfrBrOptions options;
      options.learner = LearnerFor(c);
      options.iterate = c.iterate;
      out.solver = RunCfrBr(game, options, c.iterations, LogFor(c));
      break;
    }
    case Algorithm::kDa: {
      DaOptions options;
      options.schedule = ParseBetaSchedule(c.beta_schedule);
      options.recenter_uniform = c.recenter;
      if (!c.warm_start.empty()) {
        StrategyProfile prior = LoadStrategyFile(game, c.warm_start);
        options.prior_x = prior.plans[kRowPlayer];
        options.prior_y = prior.plans[kColumnPlayer];
        options.t0 = c.t0;
      }
      out.solver =
          RunDualAveraging(game, options, c.iterations, LogFor(c), c.iterate);
      break;
    }
    case Algorithm::kSampledCfr: {
      SampledCfrOptions options;
      options.scheme = c.scheme;
      options.arithmetic = c.integer ? Arithmetic::kInteger : Arithmetic::kFloat;
      options.learner = LearnerFor(c);
      options.seed = c.seed;
      out.solver = RunSampledCfr(game, options, c.iterations, LogFor(c),
                                 c.iterate)
                       .solver;
      break;
    }
  }
  const bool current = c.iterate == IterateChoice::kCurrent;
  out.x = current ? out.solver.x_current : out.solver.x_average;
  out.y = current ? out.solver.y_current : out.solver.y_average;
  return out;
}

std::string FormatCsvRow(const ConvergenceRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%" PRId64 ",%.17g,%.17g,%.17g,%.17g,%.17g,%.3f", r.iteration,
                r.nash_gap, r.avg_regret[0], r.avg_regret[1], r.bound[0],
                r.bound[1], r.wall_ms);
  return buf;
}

void WriteConvergenceCsv(const std::vector<ConvergenceRecord>& records,
                         std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const ConvergenceRecord& r : records) out << FormatCsvRow(r) << "\n";
}

void CompareRuns(const std::vector<RunConfig>& configs_in, std::ostream& out) {
  if (configs_in.size() < 2) {
    throw ConfigError("compare: need >= 2 configs");
  }
  std::vector<RunConfig> configs = configs_in;
  int64_t stride = configs.front().log_stride;
  for (const RunConfig& c : configs) {
    if (c.game != configs.front().game) {
      throw ConfigError("compare: configs name different games ('" +
                        configs.front().game + "' and '" + c.game + "')");
    }
    ValidateRunConfig(c);
    if (configs.front().log_stride == 0) {
      stride = std::max(stride, DefaultLogStride(c.iterations));
    }
  }
  for (RunConfig& c : configs) c.log_stride = stride;

  const SequenceFormGame game =
      BuildSequenceForm(LoadGameByName(configs.front().game));
  std::vector<std::future<RunOutput>> runs;
  for (const RunConfig& c : configs) {
    runs.push_back(std::async(std::launch::async,
                              [&game, c] { return RunSolver(game, c); }));
  }
  std::vector<std::string> labels;
  for (size_t i = 0; i < configs.size(); ++i) {
    std::string label = AlgorithmName(configs[i].algorithm);
    int same = 0;
    for (size_t j = 0; j < configs.size(); ++j) {
      if (configs[j].algorithm == configs[i].algorithm) ++same;
    }
    if (same > 1) label += "#" + std::to_string(i + 1);
    labels.push_back(label);
  }
  out << "algorithm," << kCsvHeader << "\n";
  for (size_t i = 0; i < runs.size(); ++i) {
    const RunOutput result = runs[i].get();
    for (const ConvergenceRecord& r : result.solver.records) {
      out << labels[i] << "," << FormatCsvRow(r) << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Invariant suite.

namespace {

BehavioralStrategy RandomBehavioral(const Treeplex& treeplex,
                                    std::mt19937_64& rng) {
  std::exponential_distribution<double> weight(1.0);
  BehavioralStrategy b;
  b.probs.assign(treeplex.num_sequences(), 1.0);
  for (const InfosetSequences& info : treeplex.infosets()) {
    double total = 0.0;
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      b.probs[s] = weight(rng) + 1e-3;
      total += b.probs[s];
    }
    for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
      b.probs[s] /= total;
    }
  }
  return b;
}

std::string Format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

CheckResult Tolerance(const std::string& name, double deviation,
                      double tolerance) {
  return {name, deviation <= tolerance,
          "max deviation " + Format("%.3g", deviation) + " (tolerance " +
              Format("%.0e", tolerance) + ")"};
}

CheckResult FolkCheck(const std::string& name,
                      const std::vector<ConvergenceRecord>& records) {
  double worst = -1e300;
  for (const ConvergenceRecord& r : records) {
    worst = std::max(worst, FolkTheoremCheck(r.average_gap, r.avg_regret[0],
                                             r.avg_regret[1])
                                .slack);
  }
  return {name, worst <= kFolkSlack,
          std::to_string(records.size()) + " logged iterations, max gap - "
              "regret sum " + Format("%.3g", worst)};
}

}  // namespace

std::vector<CheckResult> RunChecks(const std::string& game_name,
                                   uint64_t seed) {
  const GameTree tree = LoadGameByName(game_name);
  const SequenceFormGame game = BuildSequenceForm(tree);
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> results;
  const Treeplex& row = game.treeplex(kRowPlayer);
  const Treeplex& col = game.treeplex(kColumnPlayer);

  {
    double dev = 0.0;
    for (int k = 0; k < 20; ++k) {
      const BehavioralStrategy b1 = RandomBehavioral(row, rng);
      const BehavioralStrategy b2 = RandomBehavioral(col, rng);
      const double tree_value = TreeExpectedValue(tree, game, b1, b2);
      const double sf = ExpectedValue(game, BehavioralToRealization(row, b1),
                                      BehavioralToRealization(col, b2));
      dev = std::max(dev, std::abs(tree_value - sf));
    }
    results.push_back(Tolerance("expected value: sequence form = tree walk",
                                dev, 1e-9));
  }
  {
    double dev = 0.0;
    for (int k = 0; k < 10; ++k) {
      const BehavioralStrategy b[kNumPlayers] = {RandomBehavioral(row, rng),
                                                 RandomBehavioral(col, rng)};
      for (int p = 0; p < kNumPlayers; ++p) {
        const SequenceVector walk =
            TreeCounterfactualUtilities(tree, game, p, b[p], b[1 - p]);
        const SequenceVector folded = CounterfactualUtilities(
            game, p, b[p],
            BehavioralToRealization(game.treeplex(1 - p), b[1 - p]));
        for (int s = 1; s < game.num_sequences(p); ++s) {
          dev = std::max(dev, std::abs(walk[s] - folded[s]));
        }
      }
    }
    results.push_back(Tolerance(
        "counterfactual utilities: sparse product = tree walk", dev, 1e-9));
  }
  {
    double dev = 0.0;
    bool valid = true;
    for (int k = 0; k < 20; ++k) {
      const BehavioralStrategy b = RandomBehavioral(row, rng);
      const RealizationPlan x = BehavioralToRealization(row, b);
      valid = valid && IsRealizationPlan(row, x);
      const BehavioralStrategy back = RealizationToBehavioral(row, x);
      for (size_t s = 0; s < b.probs.size(); ++s) {
        dev = std::max(dev, std::abs(back.probs[s] - b.probs[s]));
      }
    }
    CheckResult r = Tolerance("behavioral round trip", dev, 1e-12);
    r.pass = r.pass && valid;
    results.push_back(r);
  }
  {
    const size_t plans = EnumeratePurePlans(row).size() *
                         EnumeratePurePlans(col).size();
    if (plans <= 1u << 16) {
      double dev = 0.0;
      for (int k = 0; k < 10; ++k) {
        const RealizationPlan y =
            BehavioralToRealization(col, RandomBehavioral(col, rng));
        const RealizationPlan x =
            BehavioralToRealization(row, RandomBehavioral(row, rng));
        dev = std::max(dev, std::abs(BestResponse(game, kRowPlayer, y).value -
                                     BestResponseValueByEnumeration(
                                         game, kRowPlayer, y)));
        dev = std::max(dev,
                       std::abs(BestResponse(game, kColumnPlayer, x).value -
                                BestResponseValueByEnumeration(
                                    game, kColumnPlayer, x)));
      }
      results.push_back(
          Tolerance("best response = pure-plan enumeration", dev, 1e-9));
    } else {
      results.push_back({"best response = pure-plan enumeration", true,
                         "skipped: too many pure plans"});
    }
  }
  {
    double worst = 0.0, worst_danskin = -1e300;
    for (int k = 0; k < 20; ++k) {
      const RealizationPlan x =
          BehavioralToRealization(row, RandomBehavioral(row, rng));
      const RealizationPlan x2 =
          BehavioralToRealization(row, RandomBehavioral(row, rng));
      const RealizationPlan y =
          BehavioralToRealization(col, RandomBehavioral(col, rng));
      worst = std::min(worst, NashGap(game, x, y).gap);
      // f(x) = -min_y x'Ay is convex with subgradient -A y'(x).
      const BestResponseResult br = BestResponse(game, kColumnPlayer, x);
      const double f_x = -br.value;
      const double f_x2 = -BestResponse(game, kColumnPlayer, x2).value;
      const SequenceVector ay = game.payoff().Times(br.plan);
      double linear = 0.0;
      for (size_t s = 0; s < x.size(); ++s) linear -= ay[s] * (x2[s] - x[s]);
      worst_danskin = std::max(worst_danskin, linear - (f_x2 - f_x));
    }
    results.push_back({"nash gap is nonnegative", worst >= -1e-9,
                       "min gap " + Format("%.3g", worst)});
    results.push_back({"danskin subgradient inequality",
                       worst_danskin <= 1e-9,
                       "max violation " + Format("%.3g", worst_danskin)});
  }
  {
    int max_actions = 2;
    for (int p = 0; p < kNumPlayers; ++p) {
      for (const InfosetSequences& info : game.treeplex(p).infosets()) {
        max_actions = std::max(max_actions, info.num_actions());
      }
    }
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    double hedge_dev = 0.0, rm_dev = 0.0;
    for (int k = 0; k < 20; ++k) {
      std::vector<std::vector<double>> stream(200,
                                              std::vector<double>(max_actions));
      for (auto& u : stream) {
        for (double& v : u) v = unit(rng);
      }
      hedge_dev = std::max(
          hedge_dev, HedgeDaEquivalenceCheck(
                         stream, FixedHorizonHedgeRate(max_actions, 200, 1.0)));
      rm_dev = std::max(rm_dev, RmDaEquivalenceCheck(stream));
    }
    results.push_back(
        Tolerance("hedge = entropy dual averaging (simplex)", hedge_dev, 1e-9));
    results.push_back(
        Tolerance("regret matching = quadratic dual averaging", rm_dev, 1e-12));
  }
  {
    // Same opponent sequence for Hedge-CFR (constant eta) and entropy dual
    // averaging with beta^t = 1/(t eta): policies agree at leaf infosets.
    const double eta = 0.5;
    LearnerOptions hedge;
    hedge.learner = Learner::kHedge;
    hedge.rate = RateSchedule::kConstant;
    hedge.eta = eta;
    RegretTable table(row, hedge, game.payoff_bound());
    DualState da(DilatedDGF(row), StepSchedule{StepKind::kHedge, 0.0, eta},
                 game.payoff_bound());
    double leaf_dev = 0.0, interior_dev = 0.0;
    for (int t = 0; t < 50; ++t) {
      const BehavioralStrategy policy = table.Policy();
      const BehavioralStrategy lazy =
          RealizationToBehavioral(row, da.NextIterate());
      for (int i = 0; i < row.num_infosets(); ++i) {
        const InfosetSequences& info = row.infoset(i);
        for (int s = info.first_sequence; s < info.end_sequence(); ++s) {
          double& dev = row.is_leaf_infoset(i) ? leaf_dev : interior_dev;
          dev = std::max(dev, std::abs(policy.probs[s] - lazy.probs[s]));
        }
      }
      const RealizationPlan y =
          BehavioralToRealization(col, RandomBehavioral(col, rng));
      std::vector<double> values;
      const SequenceVector gradient = game.UtilityGradient(kRowPlayer, y);
      table.Update(CounterfactualUtilities(row, gradient, policy, &values),
                   values);
      SequenceVector loss = gradient;
      for (double& v : loss) v = -v;
      da.AddGradient(loss);
    }
    CheckResult r =
        Tolerance("hedge-cfr = dual averaging at leaf infosets", leaf_dev,
                  1e-12);
    r.detail += "; interior infosets differ by up to " +
                Format("%.3g", interior_dev);
    results.push_back(r);
  }
  {
    const DilatedDGF dgf(row);
    std::normal_distribution<double> normal(0.0, 1.0);
    double worst = -1e300;
    bool valid = true;
    for (int k = 0; k < 10; ++k) {
      SequenceVector g(row.num_sequences());
      for (double& v : g) v = normal(rng);
      const ProxResult prox = dgf.SmoothedBestResponse(g, 1.0);
      valid = valid && IsRealizationPlan(row, prox.plan);
      for (int j = 0; j < 20; ++j) {
        const RealizationPlan other =
            BehavioralToRealization(row, RandomBehavioral(row, rng));
        double objective = dgf.Evaluate(other);
        for (size_t s = 0; s < g.size(); ++s) objective += g[s] * other[s];
        worst = std::max(worst, prox.objective - objective);
      }
    }
    results.push_back({"smoothed best response is a minimizing plan",
                       valid && worst <= 1e-12,
                       "max excess over random plans " + Format("%.3g", worst)});
  }
  {
    const int64_t t = 300;
    const LogOptions log{0, false};
    CfrOptions rm;
    results.push_back(
        FolkCheck("folk theorem: cfr-rm", RunCfr(game, rm, t, log).records));
    CfrOptions hedge;
    hedge.learner = HedgeOptions("anytime");
    results.push_back(FolkCheck("folk theorem: cfr-hedge",
                                RunCfr(game, hedge, t, log).records));
    results.push_back(FolkCheck("folk theorem: cfr-br",
                                RunCfrBr(game, CfrBrOptions{}, t, log).records));
    results.push_back(FolkCheck("folk theorem: da",
                                RunDualAveraging(game, DaOptions{}, t, log)
                                    .records));
    SampledCfrOptions sampled;
    sampled.seed = seed;
    results.push_back(FolkCheck(
        "folk theorem: sampled-cfr",
        RunSampledCfr(game, sampled, t, log).solver.records));
  }
  return results;
}

}  // namespace efg
