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

#include <benchmark/benchmark.h>

#include <vector>

#include "patternlab/blowup.h"
#include "patternlab/grid_oracle.h"
#include "patternlab/lagrangian.h"
#include "patternlab/named_patterns.h"
#include "patternlab/pattern_union.h"
#include "patternlab/random_instances.h"
#include "patternlab/simplex.h"

namespace patternlab {
namespace {

void BM_EvalLagrange(benchmark::State& state) {
  const Pattern p = NonDiagonalPattern(static_cast<std::size_t>(state.range(0)), 3);
  const SimplexPolynomial poly = LagrangePolynomial(p);
  const SimplexPoint x = SimplexPoint::Uniform(p.m());
  for (auto _ : state) benchmark::DoNotOptimize(poly.Eval(x.weights()));
}
BENCHMARK(BM_EvalLagrange)->Arg(3)->Arg(6)->Arg(10);

void BM_Gradient(benchmark::State& state) {
  const Pattern p = NonDiagonalPattern(static_cast<std::size_t>(state.range(0)), 3);
  const SimplexPolynomial poly = LagrangePolynomial(p);
  const SimplexPoint x = SimplexPoint::Uniform(p.m());
  std::vector<double> grad(p.m());
  for (auto _ : state) {
    poly.Gradient(x.weights(), grad);
    benchmark::DoNotOptimize(grad.data());
  }
}
BENCHMARK(BM_Gradient)->Arg(3)->Arg(6)->Arg(10);

void BM_Projection(benchmark::State& state) {
  InstanceSampler sampler(1);
  std::vector<double> y(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    for (double& v : y) v = 2.0 * sampler.Unit() - 0.5;
    state.ResumeTiming();
    ProjectOntoSimplex(y);
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_Projection)->Arg(4)->Arg(16)->Arg(64);

void BM_MaximizeCompleteGraph(benchmark::State& state) {
  const Pattern p =
      PatternOfHypergraph(CompleteHypergraph(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(Maximize(p).value);
}
BENCHMARK(BM_MaximizeCompleteGraph)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GridOracle(benchmark::State& state) {
  const Pattern p = PatternB();
  const auto d = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GridOracle(p, d).value);
}
BENCHMARK(BM_GridOracle)->Arg(30)->Arg(300);

void BM_UnionOnSet(benchmark::State& state) {
  const Pattern p1 = NonDiagonalPattern(3, 3);
  const Pattern p2 = CompleteRSetPattern(static_cast<std::size_t>(state.range(0)), 3);
  const std::vector<Index> glue = {0, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(UnionOnSet(p1, p2, glue).pattern.edge_count());
}
BENCHMARK(BM_UnionOnSet)->Arg(3)->Arg(5);

void BM_MakeBlowup(benchmark::State& state) {
  const Pattern p = PatternB();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::vector<std::size_t> sizes = {n, n};
  for (auto _ : state) benchmark::DoNotOptimize(MakeBlowup(p, sizes).graph.edge_count());
}
BENCHMARK(BM_MakeBlowup)->Arg(8)->Arg(20)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace patternlab

BENCHMARK_MAIN();
