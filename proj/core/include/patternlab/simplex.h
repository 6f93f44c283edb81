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

#ifndef PATTERNLAB_SIMPLEX_H_
#define PATTERNLAB_SIMPLEX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace patternlab {

// Tolerance on |sum(x) - 1| accepted by SimplexPoint.
inline constexpr double kSimplexSumTolerance = 1e-12;

// A point of the standard simplex: nonnegative weights summing to one.
class SimplexPoint {
 public:
  // Throws InputError on a negative or non-finite weight, an empty vector,
  // or a sum further than kSimplexSumTolerance from one.
  explicit SimplexPoint(std::vector<double> weights);

  // Uniform weights on `support`, zero elsewhere.
  static SimplexPoint Barycenter(std::size_t dim,
                                 std::span<const std::size_t> support);
  static SimplexPoint Uniform(std::size_t dim);

  std::size_t dim() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  std::vector<double> weights_;
};

// Euclidean projection of y onto the simplex, in place. Sorting-based:
// find the largest k with u_k > (sum_{j<=k} u_j - 1)/k over the sorted
// values u, then clip y - tau at zero.
void ProjectOntoSimplex(std::span<double> y);

}  // namespace patternlab

#endif  // PATTERNLAB_SIMPLEX_H_
