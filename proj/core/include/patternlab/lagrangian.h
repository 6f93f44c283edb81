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

#ifndef PATTERNLAB_LAGRANGIAN_H_
#define PATTERNLAB_LAGRANGIAN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "patternlab/optimizer.h"
#include "patternlab/pattern.h"
#include "patternlab/polynomial.h"
#include "patternlab/simplex.h"

namespace patternlab {

// r! / prod_i E(i)!, the number of orderings of E.
std::int64_t MultinomialCoefficient(const Multiset& e);

// lambda_E(x) = r! sum_{E} prod_i x_i^{E(i)} / E(i)!, as a polynomial.
SimplexPolynomial LagrangePolynomial(const Pattern& p);

// lambda_E at an arbitrary nonnegative vector (no simplex check). Throws
// InputError on a dimension mismatch.
double LagrangeValue(const Pattern& p, std::span<const double> y);

double EvalLagrange(const Pattern& p, const SimplexPoint& x);
std::vector<double> GradLagrange(const Pattern& p, const SimplexPoint& x);

// Numerical lambda(P). See MaximizeOnSimplex for what is guaranteed.
OptimizerReport Maximize(const Pattern& p, const OptimizerConfig& cfg = {});

// lambda(P_G).
OptimizerReport LagrangianOfHypergraph(const Hypergraph& g,
                                       const OptimizerConfig& cfg = {});

struct MinimalityReport {
  bool minimal = false;
  double lambda = 0.0;
  // lambda(P) - lambda(P - i) per index.
  std::vector<double> margins;
  double margin_tolerance = 0.0;
  // False if any of the m + 1 optimizations failed its KKT check.
  bool converged = true;
  // Optimizer result for P itself.
  OptimizerReport report;
};

// P is minimal when every margin exceeds margin_tolerance. A one-index
// pattern is minimal iff lambda(P) > margin_tolerance (removing the index
// leaves nothing).
MinimalityReport IsMinimal(const Pattern& p, const OptimizerConfig& cfg = {},
                           double margin_tolerance = 1e-8);

}  // namespace patternlab

#endif  // PATTERNLAB_LAGRANGIAN_H_
