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

#ifndef PATTERNLAB_NAMED_PATTERNS_H_
#define PATTERNLAB_NAMED_PATTERNS_H_

#include <cstddef>

#include "patternlab/pattern.h"

namespace patternlab {

// (m, {<1,...,r>}) embedded in m >= r indices: one plain r-set.
Pattern SingleEdgePattern(std::size_t r, std::size_t m);

// P_B = (2, {<1,1,2>, <1,2,2>}), the 3-pattern of two-part triples.
Pattern PatternB();

// (m, all plain r-subsets of [m]); its constructions are the complete
// m-partite r-graphs. For r = 2 this is P_{K_m}.
Pattern CompleteRSetPattern(std::size_t m, std::size_t r);

// (m, all r-multisets on [m] except the diagonals <i,...,i>), whose Lagrange
// polynomial is 1 - sum_i x_i^r on the simplex.
Pattern NonDiagonalPattern(std::size_t m, std::size_t r);

// Complete r-graph on n vertices.
Hypergraph CompleteHypergraph(std::size_t n, std::size_t r);

}  // namespace patternlab

#endif  // PATTERNLAB_NAMED_PATTERNS_H_
