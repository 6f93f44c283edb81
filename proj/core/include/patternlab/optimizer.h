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

#ifndef PATTERNLAB_OPTIMIZER_H_
#define PATTERNLAB_OPTIMIZER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "patternlab/polynomial.h"
#include "patternlab/simplex.h"

namespace patternlab {

struct OptimizerConfig {
  // Random starts, in addition to the face barycenters.
  int restarts = 64;
  int max_iterations = 5000;
  // A start stops once its projected-gradient residual drops below this.
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  double support_threshold = 1e-7;
  // The reported point counts as a KKT point when its residual is at most
  // this.
  double kkt_tolerance = 1e-6;
  // Every face barycenter is a start when dim <= this; above it only
  // vertices, edge midpoints and the full barycenter are used.
  std::size_t full_barycenter_max_dim = 10;
  // Worker threads for the starts; results do not depend on it.
  int jobs = 1;

  // Throws InputError unless restarts >= 1, tolerance > 0, etc.
  void Validate() const;
};

struct OptimizerReport {
  double value = 0.0;
  SimplexPoint argmax = SimplexPoint({1.0});
  std::vector<std::size_t> support;
  int restarts_used = 0;
  bool converged = false;
  // ||x - Proj(x + grad f(x))||_inf at the reported point; zero exactly at
  // KKT points of the simplex-constrained problem.
  double kkt_residual = 0.0;
  // value - (exact grid maximum), when a grid oracle was run.
  std::optional<double> oracle_gap;
};

// Multistart projected gradient ascent with Armijo backtracking, finished by
// Newton steps on the face of the final point. Starts are every barycenter
// of an index subset (see full_barycenter_max_dim) followed by
// cfg.restarts uniform random simplex points drawn from cfg.seed. The
// best start wins; values within 1e-12 of the best are ties, broken towards
// the lexicographically smallest point. The result is a lower bound on the
// true maximum, not a certificate of it.
OptimizerReport MaximizeOnSimplex(const SimplexPolynomial& objective,
                                  const OptimizerConfig& cfg);

// Projected-gradient residual of `objective` at x.
double KktResidual(const SimplexPolynomial& objective,
                   std::span<const double> x);

}  // namespace patternlab

#endif  // PATTERNLAB_OPTIMIZER_H_
