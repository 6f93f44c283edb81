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

#ifndef PATTERNLAB_BLOWUP_H_
#define PATTERNLAB_BLOWUP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "patternlab/optimizer.h"
#include "patternlab/pattern.h"
#include "patternlab/simplex.h"

namespace patternlab {

// Default bound on C(n, r) for materialized blowups.
inline constexpr std::uint64_t kDefaultRSetCap = 2'000'000;

// Disjoint vertex sets V_1, ..., V_m covering [n].
class Partition {
 public:
  // Throws InputError unless the parts are disjoint and cover [0, n).
  explicit Partition(std::vector<std::vector<Index>> parts);
  // Consecutive parts: V_1 = {0..sizes[0]-1}, V_2 the next sizes[1], ...
  static Partition Consecutive(std::span<const std::size_t> sizes);

  std::size_t part_count() const { return parts_.size(); }
  std::size_t vertex_count() const { return part_of_.size(); }
  const std::vector<std::vector<Index>>& parts() const { return parts_; }
  std::vector<std::size_t> sizes() const;
  Index PartOf(Index v) const { return part_of_.at(v); }

 private:
  std::vector<std::vector<Index>> parts_;
  std::vector<Index> part_of_;
};

// The multiset with multiplicity |S cap V_i| for each part. Throws
// InputError if a vertex lies outside the partition or repeats.
Multiset Profile(std::span<const Index> s, const Partition& partition);

// C(n, k) exactly; throws CapacityError past 64 bits.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

// sum_E prod_i C(sizes_i, E(i)): the number of edges of the blowup.
std::uint64_t BlowupEdgeCount(const Pattern& p,
                              std::span<const std::size_t> sizes);

struct Blowup {
  Hypergraph graph;
  Partition partition;
};

// The P-construction on consecutive parts of the given sizes: all r-sets
// whose profile lies in E. Throws CapacityError when C(n, r) > cap.
Blowup MakeBlowup(const Pattern& p, std::span<const std::size_t> sizes,
                  std::uint64_t cap = kDefaultRSetCap);

// |E(G)| / C(n, r). Throws InputError when n < r.
double Density(const Hypergraph& g);

// Integer sizes summing to n, proportional to x by largest remainders
// (ties go to the lower index).
std::vector<std::size_t> ApportionSizes(const SimplexPoint& x, std::size_t n);

struct DensityLimitRow {
  std::size_t n = 0;
  std::vector<std::size_t> sizes;
  std::uint64_t edges = 0;
  double density = 0.0;
  double deviation = 0.0;         // |density - lambda_E(x)|
  double scaled_deviation = 0.0;  // n * deviation
};

struct DensityLimitReport {
  double lagrange_value = 0.0;  // lambda_E(x)
  std::vector<DensityLimitRow> rows;
  bool monotone = false;        // deviation non-increasing along the ladder
  double max_scaled_deviation = 0.0;
};

// Blowup densities at sizes ~ n x for each n in `scales`, compared with
// lambda_E(x). Edge counts use the closed-form product formula.
DensityLimitReport BlowupDensityLimitCheck(const Pattern& p,
                                           const SimplexPoint& x,
                                           std::span<const std::size_t> scales);

struct ConstructionReport {
  double graph_lambda = 0.0;    // lambda(G) for the blowup G
  double pattern_lambda = 0.0;  // lambda(P)
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool holds = false;           // graph_lambda <= pattern_lambda + slack
  bool converged = false;
};

// Builds G = MakeBlowup(P, sizes) and checks lambda(G) <= lambda(P) + slack.
// Throws CapacityError when G has more than `max_vertices` vertices.
ConstructionReport ConstructionLagrangianCheck(
    const Pattern& p, std::span<const std::size_t> sizes,
    const OptimizerConfig& cfg = {}, double slack = 1e-6,
    std::size_t max_vertices = 12);

}  // namespace patternlab

#endif  // PATTERNLAB_BLOWUP_H_
