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

#ifndef PATTERNLAB_CATALOG_H_
#define PATTERNLAB_CATALOG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "patternlab/grid_oracle.h"

namespace patternlab {

struct CatalogEntry {
  Rational value;
  // Stable machine tag, e.g. "fprt_5r!/2r^r".
  std::string tag;
  // Who proved what about the value.
  std::string citation;
  // Role of the value: "jump-interval-endpoint" or "non-jump".
  std::string kind;
  // Set for members of a parameterized family.
  std::int64_t family_parameter = 0;
  std::string note;
};

// Known jump/non-jump constants for r-graphs, r >= 3, in exact arithmetic.
// The Frankl-Rodl family is published in two inconsistent forms,
// 1 - 1/l^{r-1} and 1 - 1/(l^r - 1); both are listed with distinct tags for
// l = 2r+1, ..., 2r+family_size. Throws std::domain_error for r < 3 and
// r > 12 (values would leave 64-bit range).
std::vector<CatalogEntry> NonJumpCatalog(std::int64_t r, int family_size = 3);

}  // namespace patternlab

#endif  // PATTERNLAB_CATALOG_H_
