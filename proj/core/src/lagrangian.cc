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

#include "patternlab/lagrangian.h"

#include "patternlab/errors.h"

namespace patternlab {

std::int64_t MultinomialCoefficient(const Multiset& e) {
  // Build r!/prod E(i)! as a product of binomials to stay exact.
  std::int64_t out = 1;
  std::int64_t placed = 0;
  for (const auto& [index, count] : e.Runs()) {
    for (std::uint32_t k = 1; k <= count; ++k) {
      ++placed;
      out = out * placed / k;
    }
  }
  return out;
}

SimplexPolynomial LagrangePolynomial(const Pattern& p) {
  SimplexPolynomial poly(p.m());
  for (const Multiset& e : p.edges()) {
    poly.AddMonomial(static_cast<double>(MultinomialCoefficient(e)), e);
  }
  return poly;
}

double LagrangeValue(const Pattern& p, std::span<const double> y) {
  return LagrangePolynomial(p).Eval(y);
}

double EvalLagrange(const Pattern& p, const SimplexPoint& x) {
  return LagrangeValue(p, x.weights());
}

std::vector<double> GradLagrange(const Pattern& p, const SimplexPoint& x) {
  return LagrangePolynomial(p).Gradient(x.weights());
}

OptimizerReport Maximize(const Pattern& p, const OptimizerConfig& cfg) {
  return MaximizeOnSimplex(LagrangePolynomial(p), cfg);
}

OptimizerReport LagrangianOfHypergraph(const Hypergraph& g,
                                       const OptimizerConfig& cfg) {
  return Maximize(PatternOfHypergraph(g), cfg);
}

MinimalityReport IsMinimal(const Pattern& p, const OptimizerConfig& cfg,
                           double margin_tolerance) {
  MinimalityReport out;
  out.margin_tolerance = margin_tolerance;
  out.report = Maximize(p, cfg);
  out.lambda = out.report.value;
  out.converged = out.report.converged;
  out.minimal = true;
  for (Index i = 0; i < p.m(); ++i) {
    double reduced = 0.0;
    if (p.m() > 1) {
      const OptimizerReport sub = Maximize(RemoveIndex(p, i), cfg);
      reduced = sub.value;
      out.converged = out.converged && sub.converged;
    }
    const double margin = out.lambda - reduced;
    out.margins.push_back(margin);
    if (!(margin > margin_tolerance)) out.minimal = false;
  }
  return out;
}

}  // namespace patternlab
