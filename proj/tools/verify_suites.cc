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

#include "verify_suites.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "patternlab/blowup.h"
#include "patternlab/lagrangian.h"
#include "patternlab/named_patterns.h"
#include "patternlab/pattern_io.h"
#include "patternlab/pattern_union.h"
#include "patternlab/random_instances.h"
#include "patternlab/reduced_objective.h"

namespace patternlab::tools {

SuiteResult RunDecompositionSuite(int trials, std::uint64_t seed) {
  InstanceSampler sampler(seed);
  double max_index_gap = 0.0;
  double max_set_gap = 0.0;
  int stripped = 0;
  for (int t = 0; t < trials; ++t) {
    Pattern p1 = sampler.RandomPattern(sampler.UniformInt(1, 4), 3, 0.5);
    const Pattern p2 = sampler.RandomPattern(sampler.UniformInt(1, 4), 3, 0.5);
    const Index i = static_cast<Index>(sampler.UniformInt(0, p1.m() - 1));
    if (GlueOverlaps(p1, p2, {&i, 1})) {
      p1 = DropGluedDiagonals(p1, {&i, 1});
      ++stripped;
    }
    const UnionResult u = UnionOnIndex(p1, p2, i);
    const SimplexPoint x = sampler.Simplex(u.pattern.m());
    const auto v = EvalDecomposition(p1, p2, u, x.weights());
    max_index_gap = std::max(max_index_gap, std::abs(v.lhs - v.rhs));
  }
  for (int t = 0; t < trials; ++t) {
    Pattern p1 = sampler.RandomPattern(sampler.UniformInt(1, 4), 3, 0.5);
    const Pattern p2 = sampler.RandomPattern(sampler.UniformInt(1, 3), 3, 0.5);
    const std::vector<Index> glue = sampler.RandomSubset(p1.m());
    if (GlueOverlaps(p1, p2, glue)) {
      p1 = DropGluedDiagonals(p1, glue);
      ++stripped;
    }
    const UnionResult u = UnionOnSet(p1, p2, glue);
    const SimplexPoint x = sampler.Simplex(u.pattern.m());
    const auto v = EvalDecomposition(p1, p2, u, x.weights());
    max_set_gap = std::max(max_set_gap, std::abs(v.lhs - v.rhs));
  }
  double max_collapse_gap = 0.0;
  for (std::size_t m2 = 1; m2 <= 5; ++m2) {
    for (std::uint32_t s = 1; s <= 3; ++s) {
      std::vector<double> block(m2);
      double total = 0.0;
      for (double& b : block) {
        b = sampler.Unit();
        total += b;
      }
      max_collapse_gap = std::max(
          max_collapse_gap, std::abs(WeightedBlockSum(block, s) - std::pow(total, s)));
    }
  }

  SuiteResult out{"decomposition", false, Json::object()};
  out.details["trials"] = trials;
  out.details["tolerance"] = kDecompositionTolerance;
  out.details["max_gap_single_index"] = max_index_gap;
  out.details["max_gap_glue_set"] = max_set_gap;
  out.details["max_gap_block_collapse"] = max_collapse_gap;
  out.details["glued_diagonals_stripped"] = stripped;
  out.passed = max_index_gap < kDecompositionTolerance &&
               max_set_gap < kDecompositionTolerance &&
               max_collapse_gap < kDecompositionTolerance;
  return out;
}

SuiteResult RunUnionLambdaSuite(int samples, const OptimizerConfig& cfg) {
  InstanceSampler sampler(cfg.seed);
  double max_gap = 0.0;
  int instances = 0;
  int stripped = 0;
  bool all_converged = true;
  Json worst = nullptr;
  for (std::size_t m1 = 1; m1 <= 3; ++m1) {
    for (std::size_t m2 = 1; m2 <= 3; ++m2) {
      std::vector<std::vector<Index>> glues;
      for (Index i = 0; i < m1; ++i) glues.push_back({i});
      if (m1 > 1) {
        std::vector<Index> all(m1);
        for (Index i = 0; i < m1; ++i) all[i] = i;
        glues.push_back(all);
      }
      for (const auto& glue : glues) {
        for (int s = 0; s < samples; ++s) {
          Pattern p1 = sampler.RandomPattern(m1, 3, 0.5);
          const Pattern p2 = sampler.RandomPattern(m2, 3, 0.5);
          if (GlueOverlaps(p1, p2, glue)) {
            p1 = DropGluedDiagonals(p1, glue);
            ++stripped;
          }
          const UnionLambdaReport r = VerifyUnionLambda(p1, p2, glue, cfg);
          ++instances;
          all_converged = all_converged && r.converged;
          if (worst.is_null() || r.gap > max_gap) {
            max_gap = r.gap;
            worst = ToJson(r);
            worst["p1"] = PatternJson(p1);
            worst["p2"] = PatternJson(p2);
            worst["glue"] = IndicesJson(glue);
          }
        }
      }
    }
  }
  SuiteResult out{"union-lambda", false, Json::object()};
  out.details["instances"] = instances;
  out.details["tolerance"] = kUnionLambdaTolerance;
  out.details["max_gap"] = max_gap;
  out.details["all_converged"] = all_converged;
  out.details["glued_diagonals_stripped"] = stripped;
  out.details["worst"] = std::move(worst);
  out.passed = max_gap < kUnionLambdaTolerance;
  return out;
}

SuiteResult RunMinimalitySuite(const OptimizerConfig& cfg,
                               const std::optional<Pattern>& pattern) {
  struct Case {
    std::string name;
    Pattern pattern;
    std::optional<bool> expected;
  };
  std::vector<Case> cases;
  if (pattern) {
    cases.push_back({"input", *pattern, std::nullopt});
  } else {
    cases.push_back({"<1,1,2>", Pattern(2, 3, {Multiset({0, 0, 1})}), true});
    cases.push_back({"P_B", PatternB(), true});
    cases.push_back({"K4", CompleteRSetPattern(4, 2), true});
    cases.push_back({"K4^(3)", CompleteRSetPattern(4, 3), true});
    cases.push_back({"single-edge-on-4", SingleEdgePattern(3, 4), false});
    cases.push_back({"non-diagonal-3-3", NonDiagonalPattern(3, 3), true});
  }

  bool passed = true;
  Json rows = Json::array();
  for (const Case& c : cases) {
    const MinimalityReport report = IsMinimal(c.pattern, cfg);
    bool full_support = true;
    for (std::size_t i = 0; i < c.pattern.m(); ++i) {
      if (!(report.report.argmax[i] > cfg.support_threshold)) full_support = false;
    }
    Json row;
    row["name"] = c.name;
    row["pattern"] = PatternJson(c.pattern);
    row["minimal"] = report.minimal;
    row["lambda"] = report.lambda;
    row["margins"] = report.margins;
    row["argmax"] = ToJson(report.report)["argmax"];
    row["full_support"] = full_support;
    row["converged"] = report.converged;
    bool ok = !report.minimal || full_support;
    if (c.expected) {
      row["expected_minimal"] = *c.expected;
      ok = ok && report.minimal == *c.expected;
    }
    row["ok"] = ok;
    passed = passed && ok;
    rows.push_back(std::move(row));
  }
  SuiteResult out{"minimality", passed, Json::object()};
  out.details["cases"] = std::move(rows);
  return out;
}

SuiteResult RunConstructionSuite(int trials, const OptimizerConfig& cfg) {
  InstanceSampler sampler(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  int violations = 0;
  double max_excess = -1.0;
  bool all_converged = true;
  Json rows = Json::array();
  for (int t = 0; t < trials; ++t) {
    const Pattern p = sampler.RandomPattern(sampler.UniformInt(1, 3), 3, 0.5);
    std::vector<std::size_t> sizes;
    std::size_t n = 0;
    do {
      sizes.clear();
      n = 0;
      for (std::size_t i = 0; i < p.m(); ++i) {
        sizes.push_back(sampler.UniformInt(0, 8 / p.m() + 1));
        n += sizes.back();
      }
    } while (n < 3 || n > 8);
    const ConstructionReport r =
        ConstructionLagrangianCheck(p, sizes, cfg, kConstructionSlack, 8);
    if (!r.holds) ++violations;
    all_converged = all_converged && r.converged;
    max_excess = std::max(max_excess, r.graph_lambda - r.pattern_lambda);
    Json row = ToJson(r);
    row["pattern"] = PatternJson(p);
    row["sizes"] = sizes;
    rows.push_back(std::move(row));
  }
  SuiteResult out{"construction", violations == 0, Json::object()};
  out.details["trials"] = trials;
  out.details["slack"] = kConstructionSlack;
  out.details["violations"] = violations;
  out.details["max_excess"] = max_excess;
  out.details["all_converged"] = all_converged;
  out.details["instances"] = std::move(rows);
  return out;
}

}  // namespace patternlab::tools
