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

#ifndef PATTERNLAB_GRID_ORACLE_H_
#define PATTERNLAB_GRID_ORACLE_H_

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "patternlab/pattern.h"

namespace patternlab {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::uint64_t kDefaultGridPointCap = 5'000'000;

struct GridOracleResult {
  // Exact maximum of lambda_E over the grid points with denominator d.
  Rational value;
  // Numerators of the first maximizing grid point in lexicographic order.
  std::vector<std::uint32_t> argmax_counts;
  std::uint32_t denominator = 1;
  std::uint64_t points = 0;
};

// Number of grid points C(d+m-1, m-1), saturating at UINT64_MAX.
std::uint64_t GridPointCount(std::size_t m, std::uint32_t d);

// Enumerates every simplex point k/d. At such a point lambda_E equals
// (sum_E multinom(E) prod_i k_i^{E(i)}) / d^r, so the search runs on exact
// integers. Throws CapacityError when the point count exceeds `cap` or d^r
// does not fit in 63 bits, and InputError when d == 0.
GridOracleResult GridOracle(const Pattern& p, std::uint32_t d,
                            std::uint64_t cap = kDefaultGridPointCap);

}  // namespace patternlab

#endif  // PATTERNLAB_GRID_ORACLE_H_
