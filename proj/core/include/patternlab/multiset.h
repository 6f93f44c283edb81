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

#ifndef PATTERNLAB_MULTISET_H_
#define PATTERNLAB_MULTISET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace patternlab {

using Index = std::uint32_t;

// An r-multiset of 0-based indices, stored as its sorted expansion
// (e.g. <1,1,2> in 1-based notation is stored as {0,0,1}).
class Multiset {
 public:
  Multiset() = default;
  // Sorts `items`; any order is accepted.
  explicit Multiset(std::vector<Index> items);

  // Builds the multiset containing index i with multiplicity counts[i].
  static Multiset FromCounts(std::span<const std::uint32_t> counts);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Index>& items() const { return items_; }

  // Multiplicity of index i; 0 when absent.
  std::uint32_t count(Index i) const;
  // Largest index present; requires !empty().
  Index max_index() const { return items_.back(); }

  // Dense multiplicity vector of length m; requires max_index() < m.
  std::vector<std::uint32_t> Counts(std::size_t m) const;

  // (index, multiplicity) pairs in increasing index order.
  std::vector<std::pair<Index, std::uint32_t>> Runs() const;

  // 1-based human form, e.g. "<1,1,2>".
  std::string ToString() const;

  friend auto operator<=>(const Multiset&, const Multiset&) = default;
  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::vector<Index> items_;
};

// Multiplicity of index i in e, checked against the index range [0, m).
std::uint32_t Multiplicity(const Multiset& e, Index i, std::size_t m);

// All s-multisets on {0,...,m-1} in lexicographic order of their sorted
// expansions. There are C(m+s-1, s) of them.
std::vector<Multiset> EnumerateMultisets(std::size_t m, std::size_t s);

// Calls `visit` with the count vector of every composition of `total` into
// `parts` nonnegative parts, in increasing lexicographic order.
void ForEachComposition(std::size_t parts, std::uint32_t total,
                        const std::function<void(std::span<const std::uint32_t>)>& visit);

}  // namespace patternlab

#endif  // PATTERNLAB_MULTISET_H_
