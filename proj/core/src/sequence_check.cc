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

#include "patternlab/sequence_check.h"

#include <algorithm>
#include <cmath>

#include "patternlab/blowup.h"
#include "patternlab/errors.h"
#include "patternlab/lagrangian.h"

namespace patternlab {
namespace {

double LeastSquaresSlope(std::span<const double> ys, std::size_t first_t) {
  const std::size_t n = ys.size();
  if (n < 2) return 0.0;
  double mean_t = 0.0;
  double mean_y = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    mean_t += static_cast<double>(first_t + k);
    mean_y += ys[k];
  }
  mean_t /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dt = static_cast<double>(first_t + k) - mean_t;
    num += dt * (ys[k] - mean_y);
    den += dt * dt;
  }
  return num / den;
}

}  // namespace

SequenceCheckReport SequenceCheck(std::span<const Pattern> patterns,
                                  std::size_t k, double lambda0,
                                  std::span<const double> eps,
                                  const OptimizerConfig& cfg,
                                  const SequenceCheckOptions& options) {
  if (patterns.empty()) throw InputError("sequence is empty");
  if (eps.size() != patterns.size()) {
    throw InputError("need one eps(t) per pattern: got " +
                     std::to_string(eps.size()) + " for " +
                     std::to_string(patterns.size()));
  }
  if (k < 1) throw InputError("k must be >= 1");
  if (!(lambda0 >= 0.0 && lambda0 <= 1.0)) {
    throw InputError("lambda0 must lie in [0, 1]");
  }
  for (std::size_t t = 0; t < patterns.size(); ++t) {
    if (!(eps[t] > 0.0)) {
      throw InputError("eps(" + std::to_string(t + 1) + ") must be positive");
    }
    if (k > patterns[t].m()) {
      throw InputError("k=" + std::to_string(k) + " exceeds m_" +
                       std::to_string(t + 1) + "=" +
                       std::to_string(patterns[t].m()));
    }
    if (Binomial(patterns[t].m(), k) > options.max_subsets) {
      throw CapacityError("C(m_" + std::to_string(t + 1) + ", k) exceeds " +
                          std::to_string(options.max_subsets) + " subsets");
    }
  }

  SequenceCheckReport report;
  report.k = k;
  report.lambda0 = lambda0;
  report.slack = options.slack;
  bool all2 = true;
  bool all3 = true;
  for (std::size_t t = 0; t < patterns.size(); ++t) {
    const Pattern& p = patterns[t];
    SequenceTermReport term;
    term.m = p.m();
    term.eps = eps[t];
    const OptimizerReport whole = Maximize(p, cfg);
    term.lambda = whole.value;
    term.converged = whole.converged;
    term.condition2_ok = whole.value >= lambda0 + eps[t];

    term.worst_subset_lambda = -1.0;
    std::vector<Index> subset(k);
    for (std::size_t j = 0; j < k; ++j) subset[j] = static_cast<Index>(j);
    const std::size_t m = p.m();
    while (true) {
      const OptimizerReport sub = Maximize(InducedSubpattern(p, subset), cfg);
      ++term.subsets_checked;
      term.converged = term.converged && sub.converged;
      if (sub.value > term.worst_subset_lambda) {
        term.worst_subset_lambda = sub.value;
        term.worst_subset = subset;
      }
      std::size_t pos = k;
      while (pos > 0 && subset[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++subset[pos - 1];
      for (std::size_t j = pos; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    term.condition3_ok = term.worst_subset_lambda <= lambda0 + options.slack;
    all2 = all2 && term.condition2_ok;
    all3 = all3 && term.condition3_ok;
    report.terms.push_back(std::move(term));
  }

  const std::size_t window = std::min(options.trend_window, report.terms.size());
  std::vector<double> tail;
  for (std::size_t t = report.terms.size() - window; t < report.terms.size(); ++t) {
    tail.push_back(report.terms[t].lambda);
  }
  report.trend_window = window;
  report.trend_slope =
      LeastSquaresSlope(tail, report.terms.size() - window + 1);
  report.final_distance = std::abs(report.terms.back().lambda - lambda0);
  report.condition2_verdict = all2 ? "pass" : "fail";
  report.condition3_verdict = all3 ? "no-violation-found" : "violated";
  return report;
}

}  // namespace patternlab
