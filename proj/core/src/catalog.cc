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

#include "patternlab/catalog.h"

#include <stdexcept>

namespace patternlab {
namespace {

std::int64_t Factorial(std::int64_t n) {
  std::int64_t out = 1;
  for (std::int64_t k = 2; k <= n; ++k) out *= k;
  return out;
}

std::int64_t Power(std::int64_t base, std::int64_t exponent) {
  std::int64_t out = 1;
  for (std::int64_t k = 0; k < exponent; ++k) out *= base;
  return out;
}

}  // namespace

std::vector<CatalogEntry> NonJumpCatalog(std::int64_t r, int family_size) {
  if (r < 3) throw std::domain_error("catalog covers r >= 3");
  if (r > 12) throw std::domain_error("catalog supports r <= 12");
  if (family_size < 0 || family_size > 8) {
    throw std::domain_error("family_size must lie in [0, 8]");
  }
  const Rational base(Factorial(r), Power(r, r));  // r!/r^r
  std::vector<CatalogEntry> out;
  out.push_back({base, "erdos_r!/r^r",
                 "Erdos (1964): every alpha in [0, r!/r^r) is a jump",
                 "jump-interval-endpoint", 0,
                 "whether r!/r^r itself is a jump is open"});
  out.push_back({Rational(54) * base / 25, "yan_peng_54r!/25r^r",
                 "Yan and Peng (2021): 54r!/(25r^r) is a non-jump for r >= 3",
                 "non-jump", 0, "smallest known non-jump"});
  out.push_back({Rational(5) * base / 2, "fprt_5r!/2r^r",
                 "Frankl, Peng, Rodl and Talbot (2007): 5r!/(2r^r) is a "
                 "non-jump for r >= 3",
                 "non-jump", 0, ""});
  for (int k = 1; k <= family_size; ++k) {
    const std::int64_t l = 2 * r + k;
    out.push_back({Rational(1) - Rational(1, Power(l, r - 1)),
                   "frankl_rodl_1-1/l^(r-1)",
                   "Frankl and Rodl (1984), l > 2r, form 1 - 1/l^(r-1)",
                   "non-jump", l,
                   "published in two inconsistent forms; neither is asserted"});
    out.push_back({Rational(1) - Rational(1, Power(l, r) - 1),
                   "frankl_rodl_1-1/(l^r-1)",
                   "Frankl and Rodl (1984), l > 2r, form 1 - 1/(l^r - 1)",
                   "non-jump", l,
                   "published in two inconsistent forms; neither is asserted"});
  }
  return out;
}

}  // namespace patternlab
