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

#include "patternlab/blowup.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "patternlab/errors.h"
#include "patternlab/lagrangian.h"

namespace patternlab {
namespace {

// Appends every k-subset of `pool` to each prefix in `acc`.
void ExtendByCombinations(std::vector<std::vector<Index>>& acc,
                          const std::vector<Index>& pool, std::size_t k) {
  std::vector<std::vector<Index>> next;
  std::vector<std::size_t> pick(k);
  for (const auto& prefix : acc) {
    if (k > pool.size()) continue;
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    while (true) {
      auto extended = prefix;
      for (std::size_t j : pick) extended.push_back(pool[j]);
      next.push_back(std::move(extended));
      std::size_t pos = k;
      while (pos > 0 && pick[pos - 1] == pool.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t j = pos; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  acc = std::move(next);
}

}  // namespace

Partition::Partition(std::vector<std::vector<Index>> parts)
    : parts_(std::move(parts)) {
  std::size_t n = 0;
  for (const auto& part : parts_) n += part.size();
  constexpr Index kUnassigned = static_cast<Index>(-1);
  part_of_.assign(n, kUnassigned);
  for (Index i = 0; i < parts_.size(); ++i) {
    std::sort(parts_[i].begin(), parts_[i].end());
    for (Index v : parts_[i]) {
      if (v >= n || part_of_[v] != kUnassigned) {
        throw InputError("partition parts must be disjoint and cover [1, n]");
      }
      part_of_[v] = i;
    }
  }
}

Partition Partition::Consecutive(std::span<const std::size_t> sizes) {
  std::vector<std::vector<Index>> parts;
  Index next = 0;
  for (std::size_t s : sizes) {
    std::vector<Index> part(s);
    std::iota(part.begin(), part.end(), next);
    next += static_cast<Index>(s);
    parts.push_back(std::move(part));
  }
  return Partition(std::move(parts));
}

std::vector<std::size_t> Partition::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& part : parts_) out.push_back(part.size());
  return out;
}

Multiset Profile(std::span<const Index> s, const Partition& partition) {
  std::vector<Index> items;
  std::vector<Index> seen(s.begin(), s.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InputError("profile of a set with a repeated vertex");
  }
  for (Index v : s) {
    if (v >= partition.vertex_count()) {
      throw InputError("vertex " + std::to_string(v + 1) +
                       " is outside the partitioned set");
    }
    items.push_back(partition.PartOf(v));
  }
  return Multiset(std::move(items));
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 out = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    out = out * (n - k + j) / j;
    if (out > std::numeric_limits<std::uint64_t>::max()) {
      throw CapacityError("binomial coefficient exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(out);
}

std::uint64_t BlowupEdgeCount(const Pattern& p,
                              std::span<const std::size_t> sizes) {
  if (sizes.size() != p.m()) throw InputError("need one size per index");
  unsigned __int128 total = 0;
  for (const Multiset& e : p.edges()) {
    unsigned __int128 prod = 1;
    for (const auto& [i, count] : e.Runs()) prod *= Binomial(sizes[i], count);
    total += prod;
    if (total > std::numeric_limits<std::uint64_t>::max()) {
      throw CapacityError("edge count exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(total);
}

Blowup MakeBlowup(const Pattern& p, std::span<const std::size_t> sizes,
                  std::uint64_t cap) {
  if (sizes.size() != p.m()) throw InputError("need one size per index");
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (n == 0) throw InputError("blowup needs at least one vertex");
  if (Binomial(n, p.r()) > cap) {
    throw CapacityError("blowup has C(" + std::to_string(n) + ", " +
                        std::to_string(p.r()) + ") r-sets, cap is " +
                        std::to_string(cap));
  }
  Partition partition = Partition::Consecutive(sizes);
  std::vector<std::vector<Index>> edges;
  for (const Multiset& e : p.edges()) {
    std::vector<std::vector<Index>> acc(1);
    for (const auto& [i, count] : e.Runs()) {
      ExtendByCombinations(acc, partition.parts()[i], count);
    }
    for (auto& edge : acc) edges.push_back(std::move(edge));
  }
  return {Hypergraph(n, p.r(), std::move(edges)), std::move(partition)};
}

double Density(const Hypergraph& g) {
  if (g.n() < g.r()) {
    throw InputError("density needs n >= r (n=" + std::to_string(g.n()) +
                     ", r=" + std::to_string(g.r()) + ")");
  }
  return static_cast<double>(g.edge_count()) /
         static_cast<double>(Binomial(g.n(), g.r()));
}

std::vector<std::size_t> ApportionSizes(const SimplexPoint& x, std::size_t n) {
  std::vector<std::size_t> sizes(x.dim());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double quota = x[i] * static_cast<double>(n);
    sizes[i] = static_cast<std::size_t>(std::floor(quota));
    assigned += sizes[i];
    remainders.emplace_back(quota - static_cast<double>(sizes[i]), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < n && k < remainders.size(); ++k) {
    ++sizes[remainders[k].second];
    ++assigned;
  }
  // Floating sums can leave assigned > n by rounding; trim from the back.
  for (std::size_t i = x.dim(); assigned > n && i-- > 0;) {
    while (assigned > n && sizes[i] > 0) {
      --sizes[i];
      --assigned;
    }
  }
  return sizes;
}

DensityLimitReport BlowupDensityLimitCheck(
    const Pattern& p, const SimplexPoint& x,
    std::span<const std::size_t> scales) {
  if (x.dim() != p.m()) throw InputError("point dimension must equal m");
  DensityLimitReport report;
  report.lagrange_value = EvalLagrange(p, x);
  report.monotone = true;
  for (std::size_t n : scales) {
    if (n < p.r()) throw InputError("every scale must be >= r");
    DensityLimitRow row;
    row.n = n;
    row.sizes = ApportionSizes(x, n);
    row.edges = BlowupEdgeCount(p, row.sizes);
    row.density = static_cast<double>(row.edges) /
                  static_cast<double>(Binomial(n, p.r()));
    row.deviation = std::abs(row.density - report.lagrange_value);
    row.scaled_deviation = static_cast<double>(n) * row.deviation;
    if (!report.rows.empty() &&
        row.deviation > report.rows.back().deviation + 1e-15) {
      report.monotone = false;
    }
    report.max_scaled_deviation =
        std::max(report.max_scaled_deviation, row.scaled_deviation);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ConstructionReport ConstructionLagrangianCheck(
    const Pattern& p, std::span<const std::size_t> sizes,
    const OptimizerConfig& cfg, double slack, std::size_t max_vertices) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (n > max_vertices) {
    throw CapacityError("construction has " + std::to_string(n) +
                        " vertices, cap is " + std::to_string(max_vertices));
  }
  const Blowup blowup = MakeBlowup(p, sizes);
  const OptimizerReport graph = LagrangianOfHypergraph(blowup.graph, cfg);
  const OptimizerReport pattern = Maximize(p, cfg);
  ConstructionReport out;
  out.graph_lambda = graph.value;
  out.pattern_lambda = pattern.value;
  out.vertices = n;
  out.edges = blowup.graph.edge_count();
  out.holds = graph.value <= pattern.value + slack;
  out.converged = graph.converged && pattern.converged;
  return out;
}

}  // namespace patternlab
