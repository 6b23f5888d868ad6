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

#include "efg/convergence.h"

#include "efg/errors.h"

namespace efg {

int64_t DefaultLogStride(int64_t iterations) {
  return iterations <= 200 ? 1 : (iterations + 199) / 200;
}

RunLog::RunLog(int64_t iterations, const LogOptions& options)
    : stride_(options.stride > 0 ? options.stride
                                 : DefaultLogStride(iterations)),
      last_(iterations),
      wall_clock_(options.wall_clock),
      mark_(std::chrono::steady_clock::now()) {
  if (iterations < 1) throw InvalidArgument("need at least one iteration");
}

double RunLog::Lap() {
  if (!wall_clock_) return 0.0;
  const auto now = std::chrono::steady_clock::now();
  const double ms =
      std::chrono::duration<double, std::milli>(now - mark_).count();
  mark_ = now;
  return ms;
}

}  // namespace efg
