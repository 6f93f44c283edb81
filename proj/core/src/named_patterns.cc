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

#include "patternlab/named_patterns.h"

#include <vector>

#include "patternlab/errors.h"

namespace patternlab {
namespace {

// Strictly increasing r-sequences over [0, n).
std::vector<std::vector<Index>> Combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<Index>> out;
  if (r > n) return out;
  std::vector<Index> current(r);
  for (std::size_t k = 0; k < r; ++k) current[k] = static_cast<Index>(k);
  while (true) {
    out.push_back(current);
    std::size_t pos = r;
    while (pos > 0 && current[pos - 1] == n - r + pos - 1) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t k = pos; k < r; ++k) current[k] = current[k - 1] + 1;
  }
  return out;
}

}  // namespace

Pattern SingleEdgePattern(std::size_t r, std::size_t m) {
  if (m < r) throw InputError("single edge pattern needs m >= r");
  std::vector<Index> items;
  for (std::size_t k = 0; k < r; ++k) items.push_back(static_cast<Index>(k));
  return Pattern(m, r, {Multiset(items)});
}

Pattern PatternB() {
  return Pattern(2, 3, {Multiset({0, 0, 1}), Multiset({0, 1, 1})});
}

Pattern CompleteRSetPattern(std::size_t m, std::size_t r) {
  std::vector<Multiset> edges;
  for (auto& c : Combinations(m, r)) edges.emplace_back(std::move(c));
  return Pattern(m, r, std::move(edges));
}

Pattern NonDiagonalPattern(std::size_t m, std::size_t r) {
  std::vector<Multiset> edges;
  for (Multiset& e : EnumerateMultisets(m, r)) {
    if (e.items().front() != e.items().back()) edges.push_back(std::move(e));
  }
  return Pattern(m, r, std::move(edges));
}

Hypergraph CompleteHypergraph(std::size_t n, std::size_t r) {
  return Hypergraph(n, r, Combinations(n, r));
}

}  // namespace patternlab
