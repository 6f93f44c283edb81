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

#include "patternlab/pattern_union.h"

#include <algorithm>

#include "patternlab/errors.h"
#include "patternlab/lagrangian.h"

namespace patternlab {

std::string IndexOrigin::Label() const {
  if (kind == Kind::kOuter) return std::to_string(outer + 1);
  return std::to_string(outer + 1) + "_" + std::to_string(inner + 1);
}

UnionLabeling::UnionLabeling(std::size_t m1, std::size_t m2,
                             std::vector<Index> glue)
    : m1_(m1), m2_(m2), glue_(std::move(glue)) {
  std::sort(glue_.begin(), glue_.end());
  if (glue_.empty()) throw InputError("union needs a nonempty glue set");
  if (std::adjacent_find(glue_.begin(), glue_.end()) != glue_.end()) {
    throw InputError("glue set repeats an index");
  }
  if (glue_.back() >= m1_) {
    throw InputError("glue index " + std::to_string(glue_.back() + 1) +
                     " outside [1, " + std::to_string(m1_) + "]");
  }
  block_start_.assign(m1_, kNotGlued);
  for (Index i : glue_) block_start_[i] = 0;
  position_.assign(m1_, 0);
  for (Index j = 0; j < m1_; ++j) {
    position_[j] = static_cast<Index>(origin_.size());
    if (is_glued(j)) {
      block_start_[j] = position_[j];
      for (Index a = 0; a < m2_; ++a) {
        origin_.push_back({IndexOrigin::Kind::kBlock, j, a});
      }
    } else {
      origin_.push_back({IndexOrigin::Kind::kOuter, j, 0});
    }
  }
}

Index UnionLabeling::OuterIndex(Index j) const {
  if (j >= m1_ || is_glued(j)) throw InputError("not an unglued P1 index");
  return position_[j];
}

Index UnionLabeling::BlockIndex(Index i, Index a) const {
  if (i >= m1_ || !is_glued(i) || a >= m2_) {
    throw InputError("not a block index");
  }
  return block_start_[i] + a;
}

std::vector<double> UnionLabeling::Aggregate(std::span<const double> x) const {
  if (x.size() != size()) throw InputError("point has wrong dimension");
  std::vector<double> out(m1_, 0.0);
  for (std::size_t k = 0; k < origin_.size(); ++k) out[origin_[k].outer] += x[k];
  return out;
}

std::vector<double> UnionLabeling::Block(std::span<const double> x,
                                         Index i) const {
  if (x.size() != size()) throw InputError("point has wrong dimension");
  std::vector<double> out(m2_);
  for (Index a = 0; a < m2_; ++a) out[a] = x[BlockIndex(i, a)];
  return out;
}

UnionResult UnionOnIndex(const Pattern& p1, const Pattern& p2, Index i) {
  const Index glue[] = {i};
  return UnionOnSet(p1, p2, glue);
}

UnionResult UnionOnSet(const Pattern& p1, const Pattern& p2,
                       std::span<const Index> glue) {
  if (p1.r() != p2.r()) {
    throw InputError("uniformity mismatch: r1=" + std::to_string(p1.r()) +
                     ", r2=" + std::to_string(p2.r()));
  }
  UnionLabeling labeling(p1.m(), p2.m(),
                         std::vector<Index>(glue.begin(), glue.end()));
  std::vector<Multiset> edges;

  // (a) a copy of E2 inside every block.
  for (Index i : labeling.glue()) {
    for (const Multiset& e : p2.edges()) {
      std::vector<Index> items;
      for (Index a : e.items()) items.push_back(labeling.BlockIndex(i, a));
      edges.emplace_back(std::move(items));
    }
  }

  // (b) and (c): expand every glued index of every E in E1.
  for (const Multiset& e : p1.edges()) {
    std::vector<std::vector<Index>> partial(1);
    for (const auto& [j, count] : e.Runs()) {
      if (!labeling.is_glued(j)) {
        for (auto& items : partial) items.insert(items.end(), count, labeling.OuterIndex(j));
        continue;
      }
      const auto replacements = EnumerateMultisets(p2.m(), count);
      std::vector<std::vector<Index>> next;
      next.reserve(partial.size() * replacements.size());
      for (const auto& items : partial) {
        for (const Multiset& a : replacements) {
          auto extended = items;
          for (Index k : a.items()) extended.push_back(labeling.BlockIndex(j, k));
          next.push_back(std::move(extended));
        }
      }
      partial = std::move(next);
    }
    for (auto& items : partial) edges.emplace_back(std::move(items));
  }

  Pattern pattern(labeling.size(), p1.r(), std::move(edges));
  return {std::move(pattern), std::move(labeling)};
}

namespace {

bool IsDiagonalAt(const Multiset& e, Index i) {
  return e.count(i) == e.size();
}

}  // namespace

bool GlueOverlaps(const Pattern& p1, const Pattern& p2,
                  std::span<const Index> glue) {
  if (p2.empty()) return false;
  for (const Multiset& e : p1.edges()) {
    for (Index i : glue) {
      if (IsDiagonalAt(e, i)) return true;
    }
  }
  return false;
}

Pattern DropGluedDiagonals(const Pattern& p1, std::span<const Index> glue) {
  std::vector<Multiset> kept;
  for (const Multiset& e : p1.edges()) {
    bool diagonal = false;
    for (Index i : glue) diagonal = diagonal || IsDiagonalAt(e, i);
    if (!diagonal) kept.push_back(e);
  }
  return Pattern(p1.m(), p1.r(), std::move(kept));
}

DecompositionValues EvalDecomposition(const Pattern& p1, const Pattern& p2,
                                      const UnionResult& u,
                                      std::span<const double> x) {
  if (x.size() != u.pattern.m()) {
    throw InputError("point has dimension " + std::to_string(x.size()) +
                     ", union has " + std::to_string(u.pattern.m()));
  }
  DecompositionValues out;
  out.lhs = LagrangeValue(u.pattern, x);
  out.rhs = LagrangeValue(p1, u.labeling.Aggregate(x));
  const SimplexPolynomial inner = LagrangePolynomial(p2);
  for (Index i : u.labeling.glue()) out.rhs += inner.Eval(u.labeling.Block(x, i));
  return out;
}

double WeightedBlockSum(std::span<const double> block, std::uint32_t s) {
  double sum = 0.0;
  for (const Multiset& a : EnumerateMultisets(block.size(), s)) {
    double term = static_cast<double>(MultinomialCoefficient(a));
    for (Index k : a.items()) term *= block[k];
    sum += term;
  }
  return sum;
}

}  // namespace patternlab
