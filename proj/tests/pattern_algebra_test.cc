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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "oracles.h"
#include "patternlab/catalog.h"
#include "patternlab/errors.h"
#include "patternlab/lagrangian.h"
#include "patternlab/named_patterns.h"
#include "patternlab/pattern_union.h"
#include "patternlab/reduced_objective.h"

namespace patternlab {
namespace {

Multiset M(std::vector<Index> one_based) {
  for (Index& v : one_based) --v;
  return Multiset(std::move(one_based));
}

Pattern P112() { return Pattern(2, 3, {M({1, 1, 2})}); }

std::set<std::vector<Index>> EdgeSet(const Pattern& p) {
  std::set<std::vector<Index>> out;
  for (const Multiset& e : p.edges()) out.insert(e.items());
  return out;
}

double PowerSum(const std::vector<double>& x, std::size_t r) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, static_cast<double>(r));
  return s;
}

TEST(UnionTest, WorkedExample) {
  const UnionResult u = UnionOnIndex(P112(), P112(), 1);
  EXPECT_EQ(u.pattern, Pattern(3, 3, {M({2, 2, 3}), M({1, 1, 2}), M({1, 1, 3})}));
  EXPECT_EQ(u.labeling.origin()[0].Label(), "1");
  EXPECT_EQ(u.labeling.origin()[1].Label(), "2_1");
  EXPECT_EQ(u.labeling.origin()[2].Label(), "2_2");
}

TEST(UnionTest, GluingSingleEmptyIndexRelabels) {
  oracle::Gen gen(31);
  for (int t = 0; t < 20; ++t) {
    const Pattern p1 = gen.RandomPattern(gen.Int(1, 4), 3, 0.4);
    const Index i = static_cast<Index>(gen.Int(0, p1.m() - 1));
    EXPECT_EQ(UnionOnIndex(p1, Pattern(1, 3, {}), i).pattern, p1);
  }
}

TEST(UnionTest, StarsAndBarsCount) {
  for (std::uint32_t s = 1; s <= 3; ++s) {
    for (std::size_t m2 = 1; m2 <= 5; ++m2) {
      std::vector<Index> items(s, 0);
      for (std::uint32_t k = s; k < 3; ++k) items.push_back(1);
      const Pattern p1(2, 3, {Multiset(items)});
      const UnionResult u = UnionOnIndex(p1, Pattern(m2, 3, {}), 0);
      EXPECT_EQ(u.pattern.edge_count(), oracle::AllMultisets(m2, s).size()) << s << " " << m2;
    }
  }
}

TEST(UnionTest, MatchesMembershipOracle) {
  oracle::Gen gen(32);
  for (int t = 0; t < 60; ++t) {
    const Pattern p1 = gen.RandomPattern(gen.Int(1, 4), 3, 0.4);
    const Pattern p2 = gen.RandomPattern(gen.Int(1, 3), 3, 0.4);
    const std::set<Index> glue = gen.NonemptySubset(p1.m());
    const std::vector<Index> gv(glue.begin(), glue.end());
    const UnionResult u = UnionOnSet(p1, p2, gv);
    EXPECT_EQ(u.pattern.m(), p1.m() + glue.size() * (p2.m() - 1));
    EXPECT_EQ(EdgeSet(u.pattern), oracle::UnionEdges(p1, p2, glue));
  }
}

TEST(UnionTest, SetEqualsIteratedAndSingle) {
  oracle::Gen gen(33);
  for (int t = 0; t < 40; ++t) {
    const Pattern p1 = gen.RandomPattern(gen.Int(1, 4), 3, 0.4);
    const Pattern p2 = gen.RandomPattern(gen.Int(1, 3), 3, 0.4);
    const std::set<Index> glue = gen.NonemptySubset(p1.m());
    std::vector<Index> gv(glue.begin(), glue.end());
    Pattern iterated = p1;
    for (auto it = glue.rbegin(); it != glue.rend(); ++it) {
      iterated = UnionOnIndex(iterated, p2, *it).pattern;
    }
    EXPECT_EQ(UnionOnSet(p1, p2, gv).pattern, iterated);
    std::reverse(gv.begin(), gv.end());
    EXPECT_EQ(UnionOnSet(p1, p2, gv).pattern, iterated);
    const Index one[] = {gv.front()};
    EXPECT_EQ(UnionOnSet(p1, p2, one).pattern, UnionOnIndex(p1, p2, gv.front()).pattern);
  }
}

TEST(UnionTest, Errors) {
  EXPECT_THROW(UnionOnIndex(P112(), Pattern(2, 2, {}), 0), InputError);
  EXPECT_THROW(UnionOnIndex(P112(), P112(), 2), InputError);
  EXPECT_THROW(UnionOnSet(P112(), P112(), std::vector<Index>{}), InputError);
  EXPECT_THROW(UnionOnSet(P112(), P112(), std::vector<Index>{0, 0}), InputError);
}

TEST(UnionTest, LabelingIsBijective) {
  const std::vector<Index> glue = {0, 2};
  const UnionLabeling l(3, 3, glue);
  ASSERT_EQ(l.size(), 7u);
  std::set<Index> hit;
  hit.insert(l.OuterIndex(1));
  for (Index i : glue) {
    for (Index a = 0; a < 3; ++a) hit.insert(l.BlockIndex(i, a));
  }
  EXPECT_EQ(hit.size(), 7u);
  EXPECT_EQ(l.OuterIndex(1), 3u);
}

TEST(DecompositionTest, IdentityAtRandomPoints) {
  oracle::Gen gen(34);
  for (int t = 0; t < 200; ++t) {
    Pattern p1 = gen.RandomPattern(gen.Int(1, 4), 3, 0.4);
    const Pattern p2 = gen.RandomPattern(gen.Int(1, 4), 3, 0.4);
    const std::set<Index> glue = gen.NonemptySubset(p1.m());
    const std::vector<Index> gv(glue.begin(), glue.end());
    p1 = DropGluedDiagonals(p1, gv);
    ASSERT_FALSE(GlueOverlaps(p1, p2, gv));
    const UnionResult u = UnionOnSet(p1, p2, gv);
    const auto x = gen.SimplexPoint(u.pattern.m());
    const DecompositionValues v = EvalDecomposition(p1, p2, u, x);
    EXPECT_NEAR(v.lhs, v.rhs, 1e-12);
    // Independent evaluation of both sides.
    EXPECT_NEAR(v.lhs, oracle::Lagrange(u.pattern, x), 1e-13);
    double rhs = oracle::Lagrange(p1, u.labeling.Aggregate(x));
    for (Index i : gv) rhs += oracle::Lagrange(p2, u.labeling.Block(x, i));
    EXPECT_NEAR(v.rhs, rhs, 1e-13);
  }
}

TEST(DecompositionTest, OffBlockSupport) {
  const UnionResult u = UnionOnIndex(PatternB(), P112(), 1);
  const std::vector<double> x = {1.0, 0.0, 0.0};
  const DecompositionValues v = EvalDecomposition(PatternB(), P112(), u, x);
  EXPECT_EQ(v.lhs, v.rhs);
  EXPECT_EQ(v.lhs, LagrangeValue(PatternB(), std::vector<double>{1.0, 0.0}));
}

TEST(DecompositionTest, GluedDiagonalBreaksIdentity) {
  const Pattern diag(1, 3, {M({1, 1, 1})});
  const Pattern inner(2, 3, {M({1, 1, 2})});
  const Index glue[] = {0};
  EXPECT_TRUE(GlueOverlaps(diag, inner, glue));
  EXPECT_FALSE(GlueOverlaps(diag, Pattern(2, 3, {}), glue));
  const UnionResult u = UnionOnIndex(diag, inner, 0);
  const std::vector<double> x = {0.5, 0.5};
  const DecompositionValues v = EvalDecomposition(diag, inner, u, x);
  EXPECT_GT(v.rhs - v.lhs, 0.1);
}

TEST(DecompositionTest, MultinomialCollapse) {
  oracle::Gen gen(35);
  for (std::size_t m2 = 1; m2 <= 5; ++m2) {
    for (std::uint32_t s = 1; s <= 3; ++s) {
      std::vector<double> block(m2);
      double total = 0.0;
      for (double& b : block) {
        b = gen.Unit();
        total += b;
      }
      EXPECT_NEAR(WeightedBlockSum(block, s), std::pow(total, s), 1e-12);
    }
  }
}

TEST(PhiTest, ReducesAndIsAffine) {
  oracle::Gen gen(36);
  const Pattern base = PatternB();
  const std::vector<Index> glue = {1};
  for (int t = 0; t < 20; ++t) {
    const auto x = gen.SimplexPoint(2);
    const double at0 = EvalPhi({base, glue, 0.0}, x);
    const double at1 = EvalPhi({base, glue, 1.0}, x);
    const double lam = gen.Unit();
    EXPECT_NEAR(at0, oracle::Lagrange(base, x), 1e-14);
    EXPECT_NEAR(EvalPhi({base, glue, lam}, x), (1 - lam) * at0 + lam * at1, 1e-14);
  }
}

TEST(PhiTest, NonDiagonalClosedForm) {
  oracle::Gen gen(37);
  for (std::size_t m : {2u, 3u, 4u}) {
    for (std::size_t r : {2u, 3u}) {
      const Pattern p = NonDiagonalPattern(m, r);
      std::vector<Index> all(m);
      for (Index i = 0; i < m; ++i) all[i] = i;
      for (int t = 0; t < 10; ++t) {
        const auto x = gen.SimplexPoint(m);
        const double lam = gen.Unit();
        EXPECT_NEAR(EvalPhi({p, all, lam}, x), 1.0 - (1.0 - lam) * PowerSum(x, r), 1e-13);
      }
    }
  }
}

TEST(MapFTest, GrosuAgreement) {
  for (std::int64_t m : {2, 3}) {
    for (std::int64_t r : {2, 3}) {
      const Pattern p = NonDiagonalPattern(m, r);
      std::vector<Index> all(m);
      for (Index i = 0; i < m; ++i) all[i] = i;
      for (const Rational a : {Rational(0), Rational(2, 9), Rational(5, 9), Rational(1)}) {
        const double f = MapF(p, all, boost::rational_cast<double>(a)).value;
        EXPECT_NEAR(f, boost::rational_cast<double>(GrosuMap(a, m, r)), 1e-8);
      }
    }
  }
}

TEST(MapFTest, CompleteRSetPatternAgainstGrid) {
  // max of lambda_E(x) + alpha x_m^r for the plain r-subset pattern.
  const Pattern p = CompleteRSetPattern(4, 3);
  const Index glue[] = {3};
  for (double alpha : {0.0, 0.3, 0.9}) {
    const double f = MapF(p, glue, alpha).value;
    double best = 0.0;
    constexpr int kD = 40;
    for (int a = 0; a <= kD; ++a) {
      for (int b = 0; a + b <= kD; ++b) {
        for (int c = 0; a + b + c <= kD; ++c) {
          const std::vector<double> x = {a / double(kD), b / double(kD), c / double(kD),
                                         (kD - a - b - c) / double(kD)};
          best = std::max(best, oracle::Lagrange(p, x) + alpha * std::pow(x[3], 3));
        }
      }
    }
    EXPECT_LE(best, f + 1e-9);
    EXPECT_LT(f - best, 5e-3);
  }
}

TEST(MapFTest, NondecreasingAndLipschitz) {
  const Pattern p = PatternB();
  const Index glue[] = {1};
  double prev = -1.0;
  for (int k = 0; k <= 20; ++k) {
    const double lam = k / 20.0;
    const double f = MapF(p, glue, lam).value;
    if (k > 0) {
      EXPECT_GE(f, prev - 2e-10);
      EXPECT_LE(f - prev, 1.0 / 20 + 2e-10);
    }
    prev = f;
  }
}

TEST(MapFTest, RejectsBadLambda) {
  const Index glue[] = {0};
  EXPECT_THROW(MapF(PatternB(), glue, 1.5), InputError);
  EXPECT_THROW(MapF(PatternB(), glue, -0.1), InputError);
}

TEST(GrosuMapTest, ExactValues) {
  EXPECT_EQ(GrosuMap(Rational(0), 2, 3), Rational(3, 4));
  EXPECT_EQ(GrosuMap(Rational(1), 5, 4), Rational(1));
  EXPECT_EQ(GrosuMap(Rational(2, 9), 2, 3), Rational(29, 36));
  EXPECT_THROW(GrosuMap(Rational(3, 2), 2, 3), std::domain_error);
  EXPECT_THROW(GrosuMap(Rational(0), 1, 3), std::domain_error);
  EXPECT_THROW(GrosuMap(Rational(0), 2, 1), std::domain_error);
}

TEST(UnionLambdaTest, RandomSmallInstances) {
  oracle::Gen gen(38);
  for (int t = 0; t < 20; ++t) {
    Pattern p1 = gen.RandomPattern(gen.Int(1, 3), 3, 0.5);
    const Pattern p2 = gen.RandomPattern(gen.Int(1, 3), 3, 0.5);
    const std::vector<Index> glue = {static_cast<Index>(gen.Int(0, p1.m() - 1))};
    p1 = DropGluedDiagonals(p1, glue);
    const UnionLambdaReport rep = VerifyUnionLambda(p1, p2, glue);
    EXPECT_LT(rep.gap, 1e-6);
    EXPECT_TRUE(rep.converged);
  }
}

TEST(UnionLambdaTest, DependsOnInnerOnlyThroughLambda) {
  const Pattern p1 = PatternB();
  const Pattern q(3, 3, {M({1, 1, 2}), M({2, 3, 3})});
  const Index perm[] = {2, 0, 1};
  const Pattern q_relabeled = Permute(q, perm);
  const Index glue[] = {0};
  const double a = Maximize(UnionOnSet(p1, q, glue).pattern).value;
  const double b = Maximize(UnionOnSet(p1, q_relabeled, glue).pattern).value;
  EXPECT_NEAR(a, b, 1e-9);
}

TEST(UnionLambdaTest, EmptyInner) {
  const Index glue[] = {1};
  const UnionLambdaReport rep = VerifyUnionLambda(PatternB(), Pattern(2, 3, {}), glue);
  EXPECT_NEAR(rep.union_value, 0.75, 1e-9);
}

TEST(CatalogTest, ThreeUniformValues) {
  const auto entries = NonJumpCatalog(3);
  auto has = [&](const Rational& v) {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const CatalogEntry& e) { return e.value == v && !e.citation.empty(); });
  };
  EXPECT_TRUE(has(Rational(2, 9)));
  EXPECT_TRUE(has(Rational(5, 9)));
  EXPECT_TRUE(has(Rational(12, 25)));
  EXPECT_TRUE(has(Rational(48, 49)));
  EXPECT_TRUE(has(Rational(341, 342)));
  EXPECT_THROW(NonJumpCatalog(2), std::domain_error);
}

TEST(CatalogTest, GeneralR) {
  // r!/r^r for r = 4 is 24/256.
  const auto entries = NonJumpCatalog(4);
  EXPECT_EQ(entries.front().value, Rational(3, 32));
  for (const CatalogEntry& e : entries) {
    EXPECT_GT(e.value, Rational(0));
    EXPECT_LT(e.value, Rational(1));
  }
}

}  // namespace
}  // namespace patternlab
