// Copyright 2026 The Clutterlab Authors
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

#include "clutterlab/polyhedra.h"
#include "clutterlab/structures.h"

namespace clutterlab {
namespace {

IncidenceMatrix OddCycleMatrix(int n) {
  std::vector<VertexSet> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return IncidenceMatrix::OfClutter(Clutter(n, edges));
}

void BM_CoveringVerticesOddCycle(benchmark::State& state) {
  const RationalPolyhedron q = CoveringPolyhedron(OddCycleMatrix(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Vertices(q));
}
BENCHMARK(BM_CoveringVerticesOddCycle)->Arg(5)->Arg(7);

void BM_CoveringVerticesCauc(benchmark::State& state) {
  const RationalPolyhedron q = CoveringPolyhedron(
      IncidenceMatrix::OfClutter(CompleteAdmissibleUniformClutter(2, static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(Vertices(q));
}
BENCHMARK(BM_CoveringVerticesCauc)->Arg(2)->Arg(3);

void BM_IntegerDecomposition(benchmark::State& state) {
  const IncidenceMatrix a(3, {{2, 0, 3}, {3, 1, 0}, {0, 3, 0}, {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(IntegerDecompositionCheck(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IntegerDecomposition)->Arg(2)->Arg(3);

void BM_IntegerRoundingGrid(benchmark::State& state) {
  const IncidenceMatrix a = OddCycleMatrix(5);
  const auto grid = WeightGrid(5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(IntegerRoundingCheck(a, grid));
}
BENCHMARK(BM_IntegerRoundingGrid)->Arg(1)->Arg(2);

}  // namespace
}  // namespace clutterlab
