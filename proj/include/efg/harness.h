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

#ifndef EFG_HARNESS_H_
#define EFG_HARNESS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "efg/cfr.h"
#include "efg/convergence.h"
#include "efg/dual_averaging.h"
#include "efg/errors.h"
#include "efg/sampling.h"
#include "efg/sequence_form.h"

namespace efg {

// Invalid or contradictory run settings.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

enum class Algorithm { kCfrRm, kCfrHedge, kCfrBr, kDa, kSampledCfr };

std::string AlgorithmName(Algorithm algorithm);
// Throws ConfigError for unknown names.
Algorithm ParseAlgorithm(std::string_view name);

struct RunConfig {
  std::string game = "kuhn";
  Algorithm algorithm = Algorithm::kCfrRm;
  int64_t iterations = 1000;
  uint64_t seed = 0;
  // Hedge schedule: "anytime", "horizon", or a positive constant.
  std::string eta = "anytime";
  // Learner for cfr-br and sampled-cfr: "rm" or "hedge"; empty picks hedge
  // for cfr-br and rm for sampled-cfr.
  std::string learner;
  // Dual averaging: "sqrt[:c]", "constant[:c]" or "hedge:<eta>".
  std::string beta_schedule = "sqrt";
  bool recenter = false;
  std::string warm_start;  // strategy file
  int64_t t0 = 1;
  bool integer = false;
  SamplingScheme scheme = SamplingScheme::kOutcome;
  bool alternating = false;
  IterateChoice iterate = IterateChoice::kAverage;
  int64_t log_stride = 0;
  bool wall_clock = true;
  std::string out;           // CSV path; empty writes to stdout
  std::string strategy_out;  // final strategy path; empty skips it
};

// Keys accepted in config files and as long flag names: game, algo, iters,
// seed, eta, learner, beta-schedule, recenter, warm-start, t0, integer,
// scheme, alternating, iterate, log-stride, no-wall-clock, out,
// strategy-out. Boolean keys take true/false/1/0.
using Settings = std::map<std::string, std::string>;

// key=value lines; '#' starts a comment. Throws ConfigError.
Settings ParseConfigText(std::string_view text);
Settings LoadConfigFile(const std::string& path);

// Applies settings in order over `base` and validates the result.
RunConfig BuildRunConfig(const Settings& settings, RunConfig base = {});
// Throws ConfigError for invalid combinations (integer with hedge, warm start
// outside dual averaging, ...).
void ValidateRunConfig(const RunConfig& config);

struct RunOutput {
  SolverResult solver;
  // Reported strategies: the averages, or with --iterate current the last
  // iterates.
  RealizationPlan x;
  RealizationPlan y;
};

RunOutput RunSolver(const SequenceFormGame& game, const RunConfig& config);

inline constexpr const char* kCsvHeader =
    "iteration,nash_gap,avg_regret_p1,avg_regret_p2,bound_p1,bound_p2,wall_ms";

void WriteConvergenceCsv(const std::vector<ConvergenceRecord>& records,
                         std::ostream& out);
std::string FormatCsvRow(const ConvergenceRecord& record);

// Runs every config on its (shared) game with a common log stride and writes
// one table with a leading algorithm column. Throws ConfigError for fewer
// than two configs or configs naming different games.
void CompareRuns(const std::vector<RunConfig>& configs, std::ostream& out);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// The invariant suite for one game: oracle equivalences, learner
// equivalences, folk-theorem certificates of short solver runs.
std::vector<CheckResult> RunChecks(const std::string& game_name,
                                   uint64_t seed = 0);

}  // namespace efg

#endif  // EFG_HARNESS_H_
