// Copyright 2026 The patternlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PATTERNLAB_TOOLS_VERIFY_SUITES_H_
#define PATTERNLAB_TOOLS_VERIFY_SUITES_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json_reports.h"
#include "patternlab/optimizer.h"
#include "patternlab/pattern.h"

namespace patternlab::tools {

struct SuiteResult {
  std::string name;
  bool passed = false;
  Json details;
};

// Thresholds the suites assert.
inline constexpr double kDecompositionTolerance = 1e-12;
inline constexpr double kUnionLambdaTolerance = 1e-6;
inline constexpr double kConstructionSlack = 1e-8;

// Random (P1, P2, i, x) with m1, m2 <= 4 and r = 3, plus the same number of
// glue-set instances and the multinomial block collapse for s <= 3,
// m2 <= 5. Passes when every |lhs - rhs| < kDecompositionTolerance.
SuiteResult RunDecompositionSuite(int trials, std::uint64_t seed);

// For every (m1, m2) in {1,2,3}^2 and every glue index (and the full glue
// set when m1 > 1), `samples` random r = 3 pattern pairs. Passes when
// |lambda(P1 (+) P2) - f(lambda(P2))| < kUnionLambdaTolerance throughout.
SuiteResult RunUnionLambdaSuite(int samples, const OptimizerConfig& cfg);

// Minimality of a fixed corpus with known answers (or of `pattern` when
// given), asserting that minimal patterns have full-support maximizers.
SuiteResult RunMinimalitySuite(const OptimizerConfig& cfg,
                               const std::optional<Pattern>& pattern = {});

// `trials` random blowups with 3 <= n <= 8 vertices; passes when
// lambda(G) <= lambda(P) + kConstructionSlack for all of them.
SuiteResult RunConstructionSuite(int trials, const OptimizerConfig& cfg);

}  // namespace patternlab::tools

#endif  // PATTERNLAB_TOOLS_VERIFY_SUITES_H_
