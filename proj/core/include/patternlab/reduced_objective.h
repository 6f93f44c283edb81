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

#ifndef PATTERNLAB_REDUCED_OBJECTIVE_H_
#define PATTERNLAB_REDUCED_OBJECTIVE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "patternlab/grid_oracle.h"
#include "patternlab/optimizer.h"
#include "patternlab/pattern.h"
#include "patternlab/polynomial.h"

namespace patternlab {

// phi(x) = lambda_{E1}(x) + lambda2 * sum_{i in glue} x_i^r on the simplex
// of P1. Its maximum is the Lagrangian of P1 (+)_glue P2 for any P2 with
// lambda(P2) = lambda2.
struct ReducedObjective {
  Pattern base;
  std::vector<Index> glue;
  double lambda2 = 0.0;

  // Throws InputError on an empty/duplicate/out-of-range glue set or
  // lambda2 outside [0, 1].
  void Validate() const;
  SimplexPolynomial Polynomial() const;
};

double EvalPhi(const ReducedObjective& ro, std::span<const double> x);

// f(lambda2) = max_x phi(x).
OptimizerReport MapF(const Pattern& base, std::span<const Index> glue,
                     double lambda2, const OptimizerConfig& cfg = {});

// 1 - (1 - a) / m^{r-1}, exactly. Throws std::domain_error unless
// 0 <= a <= 1, m >= 2 and r >= 2.
Rational GrosuMap(const Rational& a, std::int64_t m, std::int64_t r);
double GrosuMap(double a, std::int64_t m, std::int64_t r);

struct UnionLambdaReport {
  double union_value = 0.0;   // maximize(P1 (+)_T P2)
  double inner_value = 0.0;   // maximize(P2)
  double f_value = 0.0;       // MapF(P1, T, inner_value)
  double gap = 0.0;           // |union_value - f_value|
  std::size_t union_m = 0;
  bool converged = false;     // all three optimizations passed KKT
};

// Computes lambda(P1 (+)_T P2) directly and through the reduced objective.
// Throws CapacityError when the union has more than `max_union_m` indices.
UnionLambdaReport VerifyUnionLambda(const Pattern& p1, const Pattern& p2,
                                    std::span<const Index> glue,
                                    const OptimizerConfig& cfg = {},
                                    std::size_t max_union_m = 12);

}  // namespace patternlab

#endif  // PATTERNLAB_REDUCED_OBJECTIVE_H_
