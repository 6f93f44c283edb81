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

#ifndef PATTERNLAB_PATTERN_UNION_H_
#define PATTERNLAB_PATTERN_UNION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "patternlab/pattern.h"

namespace patternlab {

// Where an index of P1 (+)_T P2 comes from.
struct IndexOrigin {
  enum class Kind { kOuter, kBlock };
  Kind kind = Kind::kOuter;
  // kOuter: the P1 index j (j not in T). kBlock: the glued P1 index i.
  Index outer = 0;
  // kBlock only: the P2 index a, i.e. this is i_a.
  Index inner = 0;

  // 1-based label: "j" or "i_a".
  std::string Label() const;

  friend bool operator==(const IndexOrigin&, const IndexOrigin&) = default;
};

// Index map of a union. New indices run through [m1] in order with each
// glued index i replaced by its block i_1, ..., i_{m2}.
class UnionLabeling {
 public:
  UnionLabeling(std::size_t m1, std::size_t m2, std::vector<Index> glue);

  std::size_t m1() const { return m1_; }
  std::size_t m2() const { return m2_; }
  std::size_t size() const { return origin_.size(); }
  const std::vector<Index>& glue() const { return glue_; }
  const std::vector<IndexOrigin>& origin() const { return origin_; }
  bool is_glued(Index j) const { return block_start_[j] != kNotGlued; }

  // New index of an unglued P1 index j.
  Index OuterIndex(Index j) const;
  // New index of i_a.
  Index BlockIndex(Index i, Index a) const;

  // Collapses x on the union's indices to P1's indices: x_i is the sum of
  // its block for glued i.
  std::vector<double> Aggregate(std::span<const double> x) const;
  // (x_{i_1}, ..., x_{i_{m2}}).
  std::vector<double> Block(std::span<const double> x, Index i) const;

 private:
  static constexpr Index kNotGlued = static_cast<Index>(-1);

  std::size_t m1_;
  std::size_t m2_;
  std::vector<Index> glue_;
  std::vector<IndexOrigin> origin_;
  // P1 index -> new index (unglued) or first block index (glued).
  std::vector<Index> position_;
  std::vector<Index> block_start_;
};

struct UnionResult {
  Pattern pattern;
  UnionLabeling labeling;
};

// P1 (+)_i P2. The result has m1 + m2 - 1 indices and contains
//  (a) every E in E2 moved into the block i_1..i_{m2},
//  (b) every E in E1 with E(i) = 0,
//  (c) for E in E1 with E(i) = s > 0, every multiset obtained by deleting
//      all s copies of i and adding an s-multiset on the block.
// Throws InputError on mismatched uniformity or i >= m1.
UnionResult UnionOnIndex(const Pattern& p1, const Pattern& p2, Index i);

// P1 (+)_T P2 with m1 + |T|(m2 - 1) indices. Equivalent to applying
// UnionOnIndex once per element of T; built in a single pass. T must be
// nonempty and duplicate-free.
UnionResult UnionOnSet(const Pattern& p1, const Pattern& p2,
                       std::span<const Index> glue);

// True when E2 is nonempty and E1 holds the diagonal <i,...,i> for some
// glued i. Clause (c) then regenerates every r-multiset on that block, the
// edges coming from E2 coincide with some of them, and the decomposition
// identity (and the reduced objective) overcount.
bool GlueOverlaps(const Pattern& p1, const Pattern& p2,
                  std::span<const Index> glue);

// P1 with the diagonals at glued indices removed.
Pattern DropGluedDiagonals(const Pattern& p1, std::span<const Index> glue);

struct DecompositionValues {
  double lhs = 0.0;  // lambda_{E-hat}(x)
  double rhs = 0.0;  // lambda_{E1}(aggregated x) + sum_i lambda_{E2}(block_i)
};

// Evaluates both sides of the union decomposition identity at x, which
// must have the union's dimension. The sides agree unless GlueOverlaps.
DecompositionValues EvalDecomposition(const Pattern& p1, const Pattern& p2,
                                      const UnionResult& u,
                                      std::span<const double> x);

// sum over s-multisets A on the block of (s!/A!) prod_a x_a^{A(a)}, which
// the multinomial theorem collapses to (sum_a x_a)^s.
double WeightedBlockSum(std::span<const double> block, std::uint32_t s);

}  // namespace patternlab

#endif  // PATTERNLAB_PATTERN_UNION_H_
