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

#ifndef PATTERNLAB_PATTERN_IO_H_
#define PATTERNLAB_PATTERN_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "patternlab/pattern.h"

namespace patternlab {

// Pattern file format, indices 1-based:
//   {"r":3,"m":2,"edges":[[1,1,2],[1,2,2]]}
// Serialization is canonical: each edge is its sorted expansion and the edge
// list is sorted lexicographically. The output has no whitespace.
std::string SerializePattern(const Pattern& p);

// Parses a pattern document. Throws InputError naming the line/column of a
// syntax error or the offending field. Duplicate edges are dropped and
// reported through `warnings`.
Pattern DeserializePattern(std::string_view text,
                           std::vector<Diagnostic>* warnings = nullptr);

// Hypergraph file format: {"r":3,"n":4,"edges":[[1,2,3],...]}.
std::string SerializeHypergraph(const Hypergraph& g);
Hypergraph DeserializeHypergraph(std::string_view text);

// Reads a whole file; throws InputError if it cannot be opened.
std::string ReadTextFile(const std::string& path);

}  // namespace patternlab

#endif  // PATTERNLAB_PATTERN_IO_H_
