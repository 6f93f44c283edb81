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

#include "patternlab/grid_oracle.h"

#include <limits>
#include <string>

#include "patternlab/errors.h"
#include "patternlab/lagrangian.h"
#include "patternlab/multiset.h"

namespace patternlab {

std::uint64_t GridPointCount(std::size_t m, std::uint32_t d) {
  // C(d + m - 1, m - 1) built incrementally; each prefix is a binomial.
  unsigned __int128 count = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t k = 1; k < m; ++k) {
    count = count * (d + k) / k;
    if (count > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(count);
}

GridOracleResult GridOracle(const Pattern& p, std::uint32_t d,
                            std::uint64_t cap) {
  if (d == 0) throw InputError("grid denominator must be >= 1");
  const std::uint64_t points = GridPointCount(p.m(), d);
  if (points > cap) {
    throw CapacityError("grid oracle needs " + std::to_string(points) +
                        " points, cap is " + std::to_string(cap));
  }
  unsigned __int128 scale = 1;
  for (std::size_t k = 0; k < p.r(); ++k) {
    scale *= d;
    if (scale > std::numeric_limits<std::int64_t>::max()) {
      throw CapacityError("grid denominator^r exceeds 63 bits");
    }
  }

  struct Term {
    std::int64_t weight;
    std::vector<std::pair<Index, std::uint32_t>> powers;
  };
  std::vector<Term> terms;
  for (const Multiset& e : p.edges()) {
    terms.push_back({MultinomialCoefficient(e), e.Runs()});
  }

  GridOracleResult out;
  out.denominator = d;
  out.points = points;
  std::int64_t best = -1;
  ForEachComposition(p.m(), d, [&](std::span<const std::uint32_t> k) {
    // The numerator is bounded by (sum k)^r = d^r, so int64 cannot overflow.
    std::int64_t numerator = 0;
    for (const Term& t : terms) {
      std::int64_t prod = t.weight;
      for (const auto& [i, e] : t.powers) {
        for (std::uint32_t s = 0; s < e; ++s) prod *= k[i];
        if (prod == 0) break;
      }
      numerator += prod;
    }
    if (numerator > best) {
      best = numerator;
      out.argmax_counts.assign(k.begin(), k.end());
    }
  });
  out.value = Rational(best, static_cast<std::int64_t>(scale));
  return out;
}

}  // namespace patternlab
