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

#ifndef PATTERNLAB_SEQUENCE_CHECK_H_
#define PATTERNLAB_SEQUENCE_CHECK_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "patternlab/optimizer.h"
#include "patternlab/pattern.h"

namespace patternlab {

struct SequenceTermReport {
  std::size_t m = 0;
  double lambda = 0.0;  // optimizer lower bound on lambda(P_t)
  double eps = 0.0;
  // lambda >= lambda0 + eps(t). A pass is evidence only; the optimizer
  // value is a lower bound.
  bool condition2_ok = false;
  // No k-subset S was found with lambda(P_t[S]) > lambda0 + slack. Since
  // subset values are lower bounds, a violation is conclusive.
  bool condition3_ok = false;
  std::vector<Index> worst_subset;
  double worst_subset_lambda = 0.0;
  std::size_t subsets_checked = 0;
  bool converged = true;
};

struct SequenceCheckReport {
  std::size_t k = 0;
  double lambda0 = 0.0;
  double slack = 0.0;
  std::vector<SequenceTermReport> terms;
  // Least-squares slope of lambda(P_t) against t over the final window,
  // and |lambda(P_last) - lambda0|. A finite prefix cannot certify a limit,
  // so condition (1) only gets these statistics.
  double trend_slope = 0.0;
  std::size_t trend_window = 0;
  double final_distance = 0.0;
  std::string condition1_verdict = "not-adjudicated";
  std::string condition2_verdict;  // "pass" or "fail"
  std::string condition3_verdict;  // "no-violation-found" or "violated"
};

struct SequenceCheckOptions {
  double slack = 1e-8;
  std::size_t trend_window = 5;
  std::size_t max_subsets = 200'000;
};

// Checks the (k, lambda0)-sequence conditions on a finite prefix. Throws
// InputError when eps has the wrong length or a nonpositive entry, when
// k > m_t, or lambda0 is outside [0, 1]; CapacityError when C(m_t, k)
// exceeds options.max_subsets.
SequenceCheckReport SequenceCheck(std::span<const Pattern> patterns,
                                  std::size_t k, double lambda0,
                                  std::span<const double> eps,
                                  const OptimizerConfig& cfg = {},
                                  const SequenceCheckOptions& options = {});

}  // namespace patternlab

#endif  // PATTERNLAB_SEQUENCE_CHECK_H_
