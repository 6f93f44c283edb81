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

#include "patternlab/simplex.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "patternlab/errors.h"

namespace patternlab {

SimplexPoint::SimplexPoint(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("simplex point must be nonempty");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InputError("simplex weight " + std::to_string(w) +
                       " is negative or not finite");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSimplexSumTolerance) {
    throw InputError("simplex weights sum to " + std::to_string(sum));
  }
}

SimplexPoint SimplexPoint::Barycenter(std::size_t dim,
                                      std::span<const std::size_t> support) {
  if (support.empty()) throw InputError("barycenter of an empty face");
  std::vector<double> w(dim, 0.0);
  const double share = 1.0 / static_cast<double>(support.size());
  for (std::size_t i : support) {
    if (i >= dim) throw InputError("barycenter support index out of range");
    w[i] = share;
  }
  return SimplexPoint(std::move(w));
}

SimplexPoint SimplexPoint::Uniform(std::size_t dim) {
  std::vector<std::size_t> all(dim);
  std::iota(all.begin(), all.end(), 0);
  return Barycenter(dim, all);
}

void ProjectOntoSimplex(std::span<double> y) {
  std::vector<double> u(y.begin(), y.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double prefix = 0.0;
  double tau = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    prefix += u[k];
    const double candidate = (prefix - 1.0) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0.0) tau = candidate;
  }
  for (double& v : y) v = std::max(v - tau, 0.0);
}

}  // namespace patternlab
