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

#ifndef PATTERNLAB_RANDOM_INSTANCES_H_
#define PATTERNLAB_RANDOM_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "patternlab/pattern.h"
#include "patternlab/simplex.h"

namespace patternlab {

// Seeded generator for test and verification instances. Only raw engine
// output is used, so a seed gives the same instances on every platform.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double Unit();
  // Uniform integer in [lo, hi].
  std::size_t UniformInt(std::size_t lo, std::size_t hi);
  // Uniform point of the simplex.
  SimplexPoint Simplex(std::size_t dim);
  // Keeps each r-multiset on [m] independently with probability `keep`.
  Pattern RandomPattern(std::size_t m, std::size_t r, double keep);
  // Keeps each plain r-subset of [n] with probability `keep`.
  Hypergraph RandomHypergraph(std::size_t n, std::size_t r, double keep);
  // Random nonempty subset of [0, m), sorted.
  std::vector<Index> RandomSubset(std::size_t m);

 private:
  std::mt19937_64 engine_;
};

}  // namespace patternlab

#endif  // PATTERNLAB_RANDOM_INSTANCES_H_
