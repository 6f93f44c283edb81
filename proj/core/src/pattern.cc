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

#include "patternlab/pattern.h"

#include <algorithm>
#include <set>
#include <string>

#include "patternlab/errors.h"

namespace patternlab {
namespace {

std::string EdgeLabel(std::size_t k) {
  return "edges[" + std::to_string(k) + "]";
}

void SortUnique(std::vector<Multiset>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

std::vector<Diagnostic> Validate(const RawPattern& raw) {
  std::vector<Diagnostic> out;
  auto error = [&](std::int64_t edge, std::string msg) {
    out.push_back({Diagnostic::Severity::kError, edge, std::move(msg)});
  };
  if (raw.r < 2) error(-1, "uniformity r=" + std::to_string(raw.r) + " < 2");
  if (raw.m < 1) error(-1, "index count m=" + std::to_string(raw.m) + " < 1");

  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t k = 0; k < raw.edges.size(); ++k) {
    const auto& edge = raw.edges[k];
    const auto pos = static_cast<std::int64_t>(k);
    if (raw.r >= 2 && static_cast<std::int64_t>(edge.size()) != raw.r) {
      error(pos, EdgeLabel(k) + ": multiplicity sum " +
                     std::to_string(edge.size()) + " != r=" +
                     std::to_string(raw.r));
    }
    bool indices_ok = true;
    for (std::int64_t v : edge) {
      if (v < 1) {
        error(pos, EdgeLabel(k) + ": index " + std::to_string(v) + " < 1");
        indices_ok = false;
      } else if (raw.m >= 1 && v > raw.m) {
        error(pos, EdgeLabel(k) + ": index " + std::to_string(v) + " > m=" +
                       std::to_string(raw.m));
        indices_ok = false;
      }
    }
    if (!indices_ok) continue;
    auto sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second) {
      out.push_back({Diagnostic::Severity::kWarning, pos,
                     EdgeLabel(k) + ": duplicate multiset removed"});
    }
  }
  return out;
}

Pattern::Pattern(std::size_t m, std::size_t r, std::vector<Multiset> edges)
    : m_(m), r_(r), edges_(std::move(edges)) {
  if (r_ < 2) throw InputError("uniformity r must be >= 2");
  if (m_ < 1) throw InputError("index count m must be >= 1");
  for (const Multiset& e : edges_) {
    if (e.size() != r_) {
      throw InputError("multiset " + e.ToString() + " has size " +
                       std::to_string(e.size()) + " != r=" +
                       std::to_string(r_));
    }
    if (e.max_index() >= m_) {
      throw InputError("multiset " + e.ToString() + " uses an index > m=" +
                       std::to_string(m_));
    }
  }
  SortUnique(edges_);
}

Pattern Pattern::FromRaw(const RawPattern& raw,
                         std::vector<Diagnostic>* warnings) {
  std::string errors;
  for (const Diagnostic& d : Validate(raw)) {
    if (d.is_error()) {
      if (!errors.empty()) errors += "; ";
      errors += d.message;
    } else if (warnings != nullptr) {
      warnings->push_back(d);
    }
  }
  if (!errors.empty()) throw InputError(errors);
  std::vector<Multiset> edges;
  edges.reserve(raw.edges.size());
  for (const auto& edge : raw.edges) {
    std::vector<Index> items;
    for (std::int64_t v : edge) items.push_back(static_cast<Index>(v - 1));
    edges.emplace_back(std::move(items));
  }
  return Pattern(static_cast<std::size_t>(raw.m),
                 static_cast<std::size_t>(raw.r), std::move(edges));
}

std::vector<Multiset> Pattern::EdgesWithMultiplicity(Index i,
                                                     std::uint32_t s) const {
  std::vector<Multiset> out;
  for (const Multiset& e : edges_) {
    if (Multiplicity(e, i, m_) == s) out.push_back(e);
  }
  return out;
}

RawPattern Pattern::ToRaw() const {
  RawPattern raw;
  raw.r = static_cast<std::int64_t>(r_);
  raw.m = static_cast<std::int64_t>(m_);
  for (const Multiset& e : edges_) {
    std::vector<std::int64_t> edge;
    for (Index i : e.items()) edge.push_back(static_cast<std::int64_t>(i) + 1);
    raw.edges.push_back(std::move(edge));
  }
  return raw;
}

Pattern InducedSubpattern(const Pattern& p, std::span<const Index> subset) {
  constexpr Index kDropped = static_cast<Index>(-1);
  std::vector<Index> relabel(p.m(), kDropped);
  std::vector<Index> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] >= p.m()) {
      throw InputError("subset index " + std::to_string(sorted[k] + 1) +
                       " > m=" + std::to_string(p.m()));
    }
    if (k > 0 && sorted[k] == sorted[k - 1]) {
      throw InputError("subset repeats index " + std::to_string(sorted[k] + 1));
    }
    relabel[sorted[k]] = static_cast<Index>(k);
  }
  if (sorted.empty()) throw InputError("induced subpattern needs a nonempty subset");

  std::vector<Multiset> edges;
  for (const Multiset& e : p.edges()) {
    std::vector<Index> items;
    items.reserve(e.size());
    bool inside = true;
    for (Index i : e.items()) {
      if (relabel[i] == kDropped) {
        inside = false;
        break;
      }
      items.push_back(relabel[i]);
    }
    if (inside) edges.emplace_back(std::move(items));
  }
  return Pattern(sorted.size(), p.r(), std::move(edges));
}

Pattern RemoveIndex(const Pattern& p, Index i) {
  if (i >= p.m()) {
    throw InputError("index " + std::to_string(i + 1) + " outside [1, " +
                     std::to_string(p.m()) + "]");
  }
  if (p.m() == 1) {
    throw InputError("cannot remove the only index of a pattern");
  }
  std::vector<Index> rest;
  for (Index j = 0; j < p.m(); ++j) {
    if (j != i) rest.push_back(j);
  }
  return InducedSubpattern(p, rest);
}

Pattern Permute(const Pattern& p, std::span<const Index> perm) {
  if (perm.size() != p.m()) throw InputError("permutation has wrong length");
  std::vector<Multiset> edges;
  for (const Multiset& e : p.edges()) {
    std::vector<Index> items;
    for (Index i : e.items()) items.push_back(perm[i]);
    edges.emplace_back(std::move(items));
  }
  return Pattern(p.m(), p.r(), std::move(edges));
}

Hypergraph::Hypergraph(std::size_t n, std::size_t r,
                       std::vector<std::vector<Index>> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  if (r_ < 2) throw InputError("uniformity r must be >= 2");
  for (auto& edge : edges_) {
    std::sort(edge.begin(), edge.end());
    if (edge.size() != r_) {
      throw InputError("hypergraph edge has " + std::to_string(edge.size()) +
                       " vertices, expected r=" + std::to_string(r_));
    }
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw InputError("hypergraph edge repeats a vertex");
    }
    if (edge.back() >= n_) {
      throw InputError("hypergraph vertex " + std::to_string(edge.back() + 1) +
                       " > n=" + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Pattern PatternOfHypergraph(const Hypergraph& g) {
  if (g.n() == 0) throw InputError("hypergraph has no vertices");
  std::vector<Multiset> edges;
  edges.reserve(g.edge_count());
  for (const auto& edge : g.edges()) edges.emplace_back(edge);
  return Pattern(g.n(), g.r(), std::move(edges));
}

}  // namespace patternlab
