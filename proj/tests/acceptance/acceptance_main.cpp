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

// Runs every acceptance criterion and prints one PASS/FAIL line per item.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.h"
#include "cli.h"
#include "json_reports.h"
#include "patternlab/blowup.h"
#include "patternlab/grid_oracle.h"
#include "patternlab/lagrangian.h"
#include "patternlab/named_patterns.h"
#include "patternlab/pattern_union.h"
#include "patternlab/reduced_objective.h"
#include "patternlab/sequence_check.h"

namespace patternlab {
namespace {

using tools::Json;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

std::string Corpus(const std::string& name) {
  return std::string(PATTERNLAB_CORPUS_DIR) + "/" + name;
}

Json Cli(std::vector<std::string> args, int* code, std::string* raw = nullptr) {
  args.insert(args.begin(), "patternlab");
  std::ostringstream out, err;
  *code = tools::RunCli(args, out, err);
  if (raw != nullptr) *raw = out.str();
  return out.str().empty() ? Json() : Json::parse(out.str());
}

std::vector<Index> All(std::size_t m) {
  std::vector<Index> v(m);
  for (Index i = 0; i < m; ++i) v[i] = i;
  return v;
}

Outcome LambdaExactness() {
  int c1 = 0, c2 = 0;
  const Json a = Cli({"lambda", Corpus("p_112.json")}, &c1);
  const Json b = Cli({"lambda", Corpus("single_triple.json")}, &c2);
  const double va = a["result"]["report"]["value"];
  const double vb = b["result"]["report"]["value"];
  const double ea = std::abs(va - 4.0 / 9), eb = std::abs(vb - 2.0 / 9);
  return {c1 == 0 && c2 == 0 && ea <= 1e-9 && eb <= 1e-9,
          Fmt("|v-4/9|=%.1e |v-2/9|=%.1e", ea, eb)};
}

Outcome MotzkinStraus() {
  double worst = 0.0;
  bool grid_ok = true;
  for (std::size_t m = 2; m <= 8; ++m) {
    const Pattern k = PatternOfHypergraph(CompleteHypergraph(m, 2));
    const double closed = 1.0 - 1.0 / static_cast<double>(m);
    worst = std::max(worst, std::abs(Maximize(k).value - closed));
    const auto mm = static_cast<std::int64_t>(m);
    grid_ok = grid_ok && GridOracle(k, static_cast<std::uint32_t>(m)).value == Rational(mm - 1, mm);
  }
  return {worst < 1e-8 && grid_ok, Fmt("max err %.1e, grid exact %.0f", worst, grid_ok)};
}

Outcome Decomposition() {
  oracle::Gen gen(2024);
  double worst = 0.0, oracle_worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    Pattern p1 = gen.RandomPattern(gen.Int(1, 4), 3, 0.4);
    const Pattern p2 = gen.RandomPattern(gen.Int(1, 4), 3, 0.4);
    const Index i = static_cast<Index>(gen.Int(0, p1.m() - 1));
    p1 = DropGluedDiagonals(p1, {&i, 1});
    const UnionResult u = UnionOnIndex(p1, p2, i);
    const auto x = gen.SimplexPoint(u.pattern.m());
    const DecompositionValues v = EvalDecomposition(p1, p2, u, x);
    worst = std::max(worst, std::abs(v.lhs - v.rhs));
    const double lhs = oracle::Lagrange(u.pattern, x);
    const double rhs = oracle::Lagrange(p1, u.labeling.Aggregate(x)) +
                       oracle::Lagrange(p2, u.labeling.Block(x, i));
    oracle_worst = std::max(oracle_worst, std::abs(lhs - rhs));
  }
  return {worst < 1e-12 && oracle_worst < 1e-12,
          Fmt("max |lhs-rhs| %.1e (oracle %.1e)", worst, oracle_worst)};
}

Outcome UnionLambda() {
  oracle::Gen gen(7);
  double worst = 0.0;
  int count = 0;
  for (std::size_t m1 = 1; m1 <= 3; ++m1) {
    for (std::size_t m2 = 1; m2 <= 3; ++m2) {
      for (Index i = 0; i < m1; ++i) {
        for (int s = 0; s < 2; ++s) {
          const std::vector<Index> glue = {i};
          const Pattern p1 = DropGluedDiagonals(gen.RandomPattern(m1, 3, 0.5), glue);
          const Pattern p2 = gen.RandomPattern(m2, 3, 0.5);
          const double lhs = Maximize(UnionOnSet(p1, p2, glue).pattern).value;
          const double rhs = MapF(p1, glue, Maximize(p2).value).value;
          worst = std::max(worst, std::abs(lhs - rhs));
          ++count;
        }
      }
    }
  }
  return {count >= 20 && worst < 1e-6, Fmt("%.0f instances, max gap %.1e", count, worst)};
}

Outcome Grosu() {
  double worst = 0.0;
  for (std::int64_t m : {2, 3}) {
    for (std::int64_t r : {2, 3}) {
      const Pattern p = NonDiagonalPattern(m, r);
      for (const Rational a : {Rational(0), Rational(2, 9), Rational(5, 9), Rational(1)}) {
        const double f = MapF(p, All(m), boost::rational_cast<double>(a)).value;
        // 1 - (1 - a) / m^(r-1) evaluated independently.
        const double want = 1.0 - (1.0 - boost::rational_cast<double>(a)) / std::pow(m, r - 1);
        worst = std::max(worst, std::abs(f - want));
      }
    }
  }
  const double special = MapF(NonDiagonalPattern(2, 3), All(2), 0.0).value;
  return {worst < 1e-8 && std::abs(special - 0.75) < 1e-8,
          Fmt("max err %.1e, f(0;m=2,r=3)=%.12f", worst, special)};
}

Outcome FProperties() {
  struct Case {
    Pattern p;
    std::vector<Index> glue;
  };
  const std::vector<Case> cases = {{NonDiagonalPattern(2, 3), {0, 1}},
                                   {PatternB(), {1}},
                                   {Pattern(2, 3, {Multiset({0, 0, 1})}), {0}},
                                   {CompleteRSetPattern(4, 3), {3}}};
  bool monotone = true;
  double worst_lip = 0.0;
  for (const Case& c : cases) {
    double prev = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const double f = MapF(c.p, c.glue, k / 20.0).value;
      if (k > 0) {
        monotone = monotone && f >= prev - 2e-6;
        worst_lip = std::max(worst_lip, (f - prev) - 1.0 / 20);
      }
      prev = f;
    }
  }
  return {monotone && worst_lip < 2e-6,
          Fmt("nondecreasing %.0f, max Lipschitz excess %.1e", monotone, worst_lip)};
}

Outcome Monotonicity() {
  oracle::Gen gen(99);
  int violations = 0, subsets = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (int t = 0; t < 2; ++t) {
      const Pattern p = gen.RandomPattern(m, 3, 0.35);
      const double whole = Maximize(p).value;
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<Index> s;
        for (Index i = 0; i < m; ++i) {
          if (mask >> i & 1) s.push_back(i);
        }
        ++subsets;
        if (Maximize(InducedSubpattern(p, s)).value > whole + 1e-8) ++violations;
      }
    }
  }
  int blowups = 0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = gen.Int(1, 3);
    const Pattern p = gen.RandomPattern(m, 3, 0.5);
    std::vector<std::size_t> sizes(m);
    std::size_t n = 0;
    for (auto& s : sizes) n += (s = gen.Int(1, 8 / m));
    if (n > 8) continue;
    ++blowups;
    const ConstructionReport rep = ConstructionLagrangianCheck(p, sizes, {}, 1e-8, 8);
    if (!rep.holds) ++violations;
  }
  return {violations == 0 && blowups == 20,
          Fmt("%.0f subsets, %.0f blowups, %.0f violations", subsets, blowups, violations)};
}

Outcome Gradients() {
  oracle::Gen gen(5);
  std::vector<Pattern> corpus = {Pattern(2, 3, {Multiset({0, 0, 1})}), PatternB(),
                                 CompleteRSetPattern(3, 3), CompleteRSetPattern(5, 2),
                                 NonDiagonalPattern(3, 3), CompleteRSetPattern(4, 4)};
  while (corpus.size() < 10) corpus.push_back(gen.RandomPattern(gen.Int(2, 4), 3, 0.5));
  double worst_fd = 0.0, worst_euler = 0.0;
  constexpr double kStep = 1e-5;
  for (const Pattern& p : corpus) {
    for (int t = 0; t < 50; ++t) {
      const auto x = gen.SimplexPoint(p.m());
      const auto g = GradLagrange(p, SimplexPoint(x));
      double dot = 0.0;
      for (std::size_t i = 0; i < p.m(); ++i) {
        auto up = x, down = x;
        up[i] += kStep;
        down[i] -= kStep;
        const double fd = (oracle::Lagrange(p, up) - oracle::Lagrange(p, down)) / (2 * kStep);
        worst_fd = std::max(worst_fd, std::abs(fd - g[i]));
        dot += x[i] * g[i];
      }
      worst_euler = std::max(worst_euler, std::abs(dot - p.r() * oracle::Lagrange(p, x)));
    }
  }
  return {worst_fd < 1e-6 && worst_euler < 1e-9,
          Fmt("max fd gap %.1e, max Euler residual %.1e", worst_fd, worst_euler)};
}

Outcome Sequence() {
  const std::vector<Pattern> constant(5, PatternB());
  const SequenceCheckReport a = SequenceCheck(constant, 2, 0.75, std::vector<double>(5, 0.01));
  bool all_fail = true;
  for (const auto& term : a.terms) all_fail = all_fail && !term.condition2_ok;
  oracle::Gen gen(3);
  std::vector<Pattern> growing;
  for (std::size_t m = 2; m <= 6; ++m) growing.push_back(gen.RandomPattern(m, 3, 0.5));
  const SequenceCheckReport b = SequenceCheck(growing, 2, 1.0, std::vector<double>(5, 0.01));
  bool exhaustive = b.condition3_verdict == "no-violation-found";
  for (std::size_t t = 0; t < growing.size(); ++t) {
    const std::size_t m = growing[t].m();
    exhaustive = exhaustive && b.terms[t].subsets_checked == m * (m - 1) / 2;
  }
  return {all_fail && exhaustive,
          Fmt("condition2 fails for all t: %.0f, condition3 exhaustive pass: %.0f", all_fail,
              exhaustive)};
}

Outcome Determinism() {
  int c1 = 0, c2 = 0;
  std::string first, second;
  Cli({"verify", "all", "--seed", "3"}, &c1, &first);
  Cli({"verify", "all", "--seed", "3"}, &c2, &second);
  return {c1 == 0 && c2 == 0 && first == second && !first.empty(),
          Fmt("%.0f bytes, identical %.0f, exit %.0f", first.size(), first == second, c1)};
}

}  // namespace
}  // namespace patternlab

int main() {
  using namespace patternlab;
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "lambda exactness", 1.0, LambdaExactness},
      {2, "Motzkin-Straus oracle", 10.0, MotzkinStraus},
      {3, "decomposition identity", 5.0, Decomposition},
      {4, "union Lagrangian reduction", 0.0, UnionLambda},
      {5, "Grosu formula", 0.0, Grosu},
      {6, "f monotone and 1-Lipschitz", 0.0, FProperties},
      {7, "monotonicity and construction inequality", 0.0, Monotonicity},
      {8, "gradient and Euler relation", 0.0, Gradients},
      {9, "sequence checker", 0.0, Sequence},
      {10, "determinism", 0.0, Determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass;
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      pass = false;
      o.detail += " (over time budget)";
    }
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %-42s %s (%.2fs)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
