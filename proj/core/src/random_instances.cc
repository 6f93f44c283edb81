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

#include "patternlab/random_instances.h"

#include <cmath>

#include "patternlab/multiset.h"
#include "patternlab/named_patterns.h"

namespace patternlab {

double InstanceSampler::Unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t InstanceSampler::UniformInt(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

SimplexPoint InstanceSampler::Simplex(std::size_t dim) {
  std::vector<double> x(dim);
  double sum = 0.0;
  for (double& v : x) {
    v = -std::log1p(-Unit());
    sum += v;
  }
  for (double& v : x) v /= sum;
  // Push the rounding residue into the largest coordinate.
  double total = 0.0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    total += x[i];
    if (x[i] > x[largest]) largest = i;
  }
  x[largest] += 1.0 - total;
  return SimplexPoint(std::move(x));
}

Pattern InstanceSampler::RandomPattern(std::size_t m, std::size_t r,
                                       double keep) {
  std::vector<Multiset> edges;
  for (Multiset& e : EnumerateMultisets(m, r)) {
    if (Unit() < keep) edges.push_back(std::move(e));
  }
  return Pattern(m, r, std::move(edges));
}

Hypergraph InstanceSampler::RandomHypergraph(std::size_t n, std::size_t r,
                                             double keep) {
  std::vector<std::vector<Index>> edges;
  for (const auto& e : CompleteHypergraph(n, r).edges()) {
    if (Unit() < keep) edges.push_back(e);
  }
  return Hypergraph(n, r, std::move(edges));
}

std::vector<Index> InstanceSampler::RandomSubset(std::size_t m) {
  std::vector<Index> out;
  while (out.empty()) {
    for (Index i = 0; i < m; ++i) {
      if (Unit() < 0.5) out.push_back(i);
    }
  }
  return out;
}

}  // namespace patternlab
