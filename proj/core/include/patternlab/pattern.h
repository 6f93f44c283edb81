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

#ifndef PATTERNLAB_PATTERN_H_
#define PATTERNLAB_PATTERN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "patternlab/multiset.h"

namespace patternlab {

// Unchecked pattern data as read from a file: indices are 1-based.
struct RawPattern {
  std::int64_t r = 0;
  std::int64_t m = 0;
  std::vector<std::vector<std::int64_t>> edges;
};

struct Diagnostic {
  enum class Severity { kWarning, kError };
  Severity severity = Severity::kError;
  // Position in RawPattern::edges, or -1 for header fields.
  std::int64_t edge = -1;
  std::string message;

  bool is_error() const { return severity == Severity::kError; }
};

// Reports every invariant violation of `raw`. Duplicate multisets are
// reported as warnings; everything else is an error. An empty result means
// the data is a valid pattern.
std::vector<Diagnostic> Validate(const RawPattern& raw);

// An r-uniform pattern (m, E): m indices and a set of r-multisets on them.
// Immutable once built; edges are kept sorted and duplicate-free.
class Pattern {
 public:
  // Throws InputError if r < 2, m < 1, or an edge has the wrong size or an
  // index >= m. Duplicate edges are removed.
  Pattern(std::size_t m, std::size_t r, std::vector<Multiset> edges);

  // Throws InputError with all error diagnostics joined. Warnings are
  // appended to `warnings` when non-null.
  static Pattern FromRaw(const RawPattern& raw,
                         std::vector<Diagnostic>* warnings = nullptr);

  std::size_t m() const { return m_; }
  std::size_t r() const { return r_; }
  const std::vector<Multiset>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  // The class E^{i,s} = {E : E(i) = s}.
  std::vector<Multiset> EdgesWithMultiplicity(Index i, std::uint32_t s) const;

  RawPattern ToRaw() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::size_t m_;
  std::size_t r_;
  std::vector<Multiset> edges_;
};

// P[S]: keeps the multisets supported on S and relabels the surviving
// indices to 0..|S|-1 preserving their order. S may be given in any order
// but must not repeat indices.
Pattern InducedSubpattern(const Pattern& p, std::span<const Index> subset);

// P - i, i.e. P[[m] \ {i}].
Pattern RemoveIndex(const Pattern& p, Index i);

// Applies a relabeling: index j of p becomes perm[j].
Pattern Permute(const Pattern& p, std::span<const Index> perm);

// An r-graph on n vertices (0-based).
class Hypergraph {
 public:
  // Throws InputError on repeated vertices, wrong edge size or vertex >= n.
  Hypergraph(std::size_t n, std::size_t r,
             std::vector<std::vector<Index>> edges);

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  const std::vector<std::vector<Index>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_;
  std::size_t r_;
  std::vector<std::vector<Index>> edges_;
};

// P_G: m = n and every edge becomes a multiplicity-one multiset.
Pattern PatternOfHypergraph(const Hypergraph& g);

}  // namespace patternlab

#endif  // PATTERNLAB_PATTERN_H_
