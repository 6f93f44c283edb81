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

#include "patternlab/reduced_objective.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "patternlab/errors.h"
#include "patternlab/lagrangian.h"
#include "patternlab/pattern_union.h"

namespace patternlab {

void ReducedObjective::Validate() const {
  if (glue.empty()) throw InputError("glue set must be nonempty");
  std::vector<Index> sorted = glue;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("glue set repeats an index");
  }
  if (sorted.back() >= base.m()) {
    throw InputError("glue index " + std::to_string(sorted.back() + 1) +
                     " outside [1, " + std::to_string(base.m()) + "]");
  }
  if (!(lambda2 >= 0.0 && lambda2 <= 1.0)) {
    throw InputError("inner Lagrangian must lie in [0, 1]");
  }
}

SimplexPolynomial ReducedObjective::Polynomial() const {
  Validate();
  SimplexPolynomial poly = LagrangePolynomial(base);
  if (lambda2 != 0.0) {
    for (Index i : glue) {
      poly.AddPower(lambda2, i, static_cast<std::uint32_t>(base.r()));
    }
  }
  return poly;
}

double EvalPhi(const ReducedObjective& ro, std::span<const double> x) {
  return ro.Polynomial().Eval(x);
}

OptimizerReport MapF(const Pattern& base, std::span<const Index> glue,
                     double lambda2, const OptimizerConfig& cfg) {
  ReducedObjective ro{base, std::vector<Index>(glue.begin(), glue.end()),
                      lambda2};
  return MaximizeOnSimplex(ro.Polynomial(), cfg);
}

Rational GrosuMap(const Rational& a, std::int64_t m, std::int64_t r) {
  if (a < 0 || a > 1) throw std::domain_error("a must lie in [0, 1]");
  if (m < 2) throw std::domain_error("m must be >= 2");
  if (r < 2) throw std::domain_error("r must be >= 2");
  std::int64_t power = 1;
  for (std::int64_t k = 1; k < r; ++k) {
    if (power > std::numeric_limits<std::int64_t>::max() / m) {
      throw std::domain_error("m^(r-1) overflows");
    }
    power *= m;
  }
  return Rational(1) - (Rational(1) - a) / power;
}

double GrosuMap(double a, std::int64_t m, std::int64_t r) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("a must lie in [0, 1]");
  if (m < 2) throw std::domain_error("m must be >= 2");
  if (r < 2) throw std::domain_error("r must be >= 2");
  return 1.0 - (1.0 - a) / std::pow(static_cast<double>(m),
                                    static_cast<double>(r - 1));
}

UnionLambdaReport VerifyUnionLambda(const Pattern& p1, const Pattern& p2,
                                    std::span<const Index> glue,
                                    const OptimizerConfig& cfg,
                                    std::size_t max_union_m) {
  const std::size_t union_m = p1.m() + glue.size() * (p2.m() - 1);
  if (union_m > max_union_m) {
    throw CapacityError("union has " + std::to_string(union_m) +
                        " indices, cap is " + std::to_string(max_union_m));
  }
  const UnionResult u = UnionOnSet(p1, p2, glue);
  const OptimizerReport direct = Maximize(u.pattern, cfg);
  const OptimizerReport inner = Maximize(p2, cfg);
  const OptimizerReport reduced = MapF(p1, glue, inner.value, cfg);

  UnionLambdaReport out;
  out.union_value = direct.value;
  out.inner_value = inner.value;
  out.f_value = reduced.value;
  out.gap = std::abs(direct.value - reduced.value);
  out.union_m = u.pattern.m();
  out.converged = direct.converged && inner.converged && reduced.converged;
  return out;
}

}  // namespace patternlab
