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

#include <set>
#include <string>
#include <vector>

#include "oracles.h"
#include "patternlab/errors.h"
#include "patternlab/multiset.h"
#include "patternlab/named_patterns.h"
#include "patternlab/pattern.h"
#include "patternlab/pattern_io.h"

namespace patternlab {
namespace {

Multiset M(std::vector<Index> one_based) {
  for (Index& v : one_based) --v;
  return Multiset(std::move(one_based));
}

Pattern P112() { return Pattern(2, 3, {M({1, 1, 2})}); }

TEST(MultisetTest, MultiplicityCounts) {
  EXPECT_EQ(Multiplicity(M({1, 1, 2}), 0, 2), 2u);
  EXPECT_EQ(Multiplicity(M({1, 1, 2}), 2, 3), 0u);
  EXPECT_EQ(Multiplicity(M({1, 2, 2}), 1, 2), 2u);
}

TEST(MultisetTest, MultiplicityRejectsOutOfRange) {
  EXPECT_THROW(Multiplicity(M({1, 1, 2}), 3, 3), InputError);
}

TEST(MultisetTest, CanonicalOrderAndString) {
  const Multiset a({2, 0, 0});
  EXPECT_EQ(a.items(), (std::vector<Index>{0, 0, 2}));
  EXPECT_EQ(a.ToString(), "<1,1,3>");
  EXPECT_EQ(Multiset::FromCounts(std::vector<std::uint32_t>{2, 0, 1}), a);
}

TEST(MultisetTest, EnumerationMatchesStarsAndBars) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t s = 0; s <= 4; ++s) {
      const auto got = EnumerateMultisets(m, s);
      const auto want = oracle::AllMultisets(m, s);
      ASSERT_EQ(got.size(), want.size()) << m << " " << s;
      for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(got[k].items(), want[k]);
    }
  }
}

TEST(MultisetTest, CompositionsSumToTotal) {
  int seen = 0;
  ForEachComposition(3, 4, [&](std::span<const std::uint32_t> c) {
    EXPECT_EQ(c[0] + c[1] + c[2], 4u);
    ++seen;
  });
  EXPECT_EQ(seen, 15);
}

TEST(InducedSubpatternTest, Examples) {
  const Pattern p = P112();
  const Index s1[] = {0};
  EXPECT_EQ(InducedSubpattern(p, s1), Pattern(1, 3, {}));
  const Index s12[] = {0, 1};
  EXPECT_EQ(InducedSubpattern(p, s12), p);
  const Pattern q(3, 3, {M({1, 1, 2}), M({3, 3, 3})});
  const Index s3[] = {2};
  EXPECT_EQ(InducedSubpattern(q, s3), Pattern(1, 3, {M({1, 1, 1})}));
}

TEST(InducedSubpatternTest, Errors) {
  const Index bad[] = {0, 2};
  EXPECT_THROW(InducedSubpattern(P112(), bad), InputError);
  const Index repeat[] = {0, 0};
  EXPECT_THROW(InducedSubpattern(P112(), repeat), InputError);
}

TEST(InducedSubpatternTest, MatchesSupportFilterOracle) {
  oracle::Gen gen(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = gen.Int(1, 5);
    const Pattern p = gen.RandomPattern(m, 3, 0.4);
    const std::set<Index> s = gen.NonemptySubset(m);
    const std::vector<Index> subset(s.begin(), s.end());
    std::vector<Index> relabel(m, 0);
    for (Index k = 0; k < subset.size(); ++k) relabel[subset[k]] = k;
    std::vector<Multiset> want;
    for (const Multiset& e : p.edges()) {
      bool inside = true;
      std::vector<Index> items;
      for (Index v : e.items()) {
        inside = inside && s.count(v) > 0;
        items.push_back(relabel[v]);
      }
      if (inside) want.emplace_back(items);
    }
    EXPECT_EQ(InducedSubpattern(p, subset), Pattern(subset.size(), 3, want));
  }
}

TEST(InducedSubpatternTest, NestedRestrictionComposes) {
  oracle::Gen gen(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = gen.Int(2, 5);
    const Pattern p = gen.RandomPattern(m, 3, 0.4);
    const std::set<Index> outer = gen.NonemptySubset(m);
    const std::vector<Index> tv(outer.begin(), outer.end());
    std::vector<Index> sv;
    std::vector<Index> s_in_t;
    for (Index k = 0; k < tv.size(); ++k) {
      if (gen.Coin(0.6) || (k + 1 == tv.size() && sv.empty())) {
        sv.push_back(tv[k]);
        s_in_t.push_back(k);
      }
    }
    EXPECT_EQ(InducedSubpattern(InducedSubpattern(p, tv), s_in_t), InducedSubpattern(p, sv));
  }
}

TEST(RemoveIndexTest, Examples) {
  EXPECT_EQ(RemoveIndex(P112(), 1), Pattern(1, 3, {}));
  EXPECT_EQ(RemoveIndex(PatternB(), 0), Pattern(1, 3, {}));
  const Pattern q(3, 3, {M({1, 1, 2}), M({3, 3, 3})});
  EXPECT_EQ(RemoveIndex(q, 1), Pattern(2, 3, {M({2, 2, 2})}));
  EXPECT_THROW(RemoveIndex(q, 3), InputError);
}

TEST(RemoveIndexTest, EqualsComplementRestriction) {
  oracle::Gen gen(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = gen.Int(2, 5);
    const Pattern p = gen.RandomPattern(m, 3, 0.4);
    const Index i = static_cast<Index>(gen.Int(0, m - 1));
    std::vector<Index> rest;
    for (Index j = 0; j < m; ++j) {
      if (j != i) rest.push_back(j);
    }
    EXPECT_EQ(RemoveIndex(p, i), InducedSubpattern(p, rest));
  }
}

TEST(HypergraphTest, PatternOfHypergraph) {
  const Hypergraph triple(3, 3, {{0, 1, 2}});
  EXPECT_EQ(PatternOfHypergraph(triple), Pattern(3, 3, {M({1, 2, 3})}));
  const Hypergraph empty(4, 3, {});
  EXPECT_EQ(PatternOfHypergraph(empty), Pattern(4, 3, {}));
  const Pattern k4 = PatternOfHypergraph(CompleteHypergraph(4, 2));
  EXPECT_EQ(k4.m(), 4u);
  EXPECT_EQ(k4.edge_count(), 6u);
}

TEST(HypergraphTest, RejectsRepeatedVertex) {
  EXPECT_THROW(Hypergraph(3, 3, {{0, 0, 1}}), InputError);
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1}}), InputError);
}

TEST(ValidateTest, Diagnostics) {
  EXPECT_TRUE(Validate(RawPattern{3, 2, {{1, 1, 2}}}).empty());
  auto d = Validate(RawPattern{3, 2, {{1, 1}}});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].message, "edges[0]: multiplicity sum 2 != r=3");
  d = Validate(RawPattern{3, 2, {{1, 1, 3}}});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].message, "edges[0]: index 3 > m=2");
  d = Validate(RawPattern{3, 2, {{1, 1, 2}, {2, 1, 1}}});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_FALSE(d[0].is_error());
}

TEST(ValidateTest, DuplicatesDroppedWithWarning) {
  std::vector<Diagnostic> warnings;
  const Pattern p = Pattern::FromRaw(RawPattern{3, 2, {{1, 1, 2}, {1, 2, 1}}}, &warnings);
  EXPECT_EQ(p.edge_count(), 1u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(SerializeTest, FixedEncodings) {
  EXPECT_EQ(SerializePattern(PatternB()), R"({"r":3,"m":2,"edges":[[1,1,2],[1,2,2]]})");
  EXPECT_EQ(SerializePattern(Pattern(1, 3, {})), R"({"r":3,"m":1,"edges":[]})");
  EXPECT_EQ(DeserializePattern(R"({"r":3,"m":2,"edges":[[2,2,1],[1,2,1]]})"), PatternB());
}

TEST(SerializeTest, RoundTripsRandomPatterns) {
  oracle::Gen gen(14);
  for (int t = 0; t < 100; ++t) {
    const Pattern p = gen.RandomPattern(gen.Int(1, 5), gen.Int(2, 4), 0.3);
    const std::string text = SerializePattern(p);
    const Pattern q = DeserializePattern(text);
    EXPECT_EQ(q, p);
    EXPECT_EQ(SerializePattern(q), text);
  }
}

TEST(SerializeTest, ReportsLocations) {
  try {
    DeserializePattern("{\"r\":3,\n\"m\":2,\n\"edges\":[[1,1,]]}");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    DeserializePattern(R"({"r":3,"m":2,"edges":[[1,1,"x"]]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("edges[0][2]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(DeserializePattern(R"({"m":2,"edges":[]})"), InputError);
  EXPECT_THROW(DeserializePattern(R"({"r":3,"m":2,"edges":[[1,1,3]]})"), InputError);
}

TEST(SerializeTest, HypergraphRoundTrip) {
  const Hypergraph g(5, 3, {{0, 1, 2}, {1, 3, 4}});
  EXPECT_EQ(SerializeHypergraph(g), R"({"r":3,"n":5,"edges":[[1,2,3],[2,4,5]]})");
  EXPECT_EQ(DeserializeHypergraph(SerializeHypergraph(g)), g);
  EXPECT_THROW(DeserializeHypergraph(R"({"r":3,"n":3,"edges":[[1,1,2]]})"), InputError);
}

TEST(PatternTest, CanonicalizationIsIdempotent) {
  oracle::Gen gen(15);
  for (int t = 0; t < 20; ++t) {
    const Pattern p = gen.RandomPattern(gen.Int(1, 4), 3, 0.5);
    EXPECT_EQ(Pattern(p.m(), p.r(), p.edges()), p);
  }
}

TEST(PatternTest, RejectsBadShape) {
  EXPECT_THROW(Pattern(2, 1, {}), InputError);
  EXPECT_THROW(Pattern(0, 3, {}), InputError);
  EXPECT_THROW(Pattern(2, 3, {M({1, 2})}), InputError);
}

}  // namespace
}  // namespace patternlab
