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

#include "clutterlab/ideals.h"
#include "clutterlab/structures.h"

namespace clutterlab {
namespace {

void BM_NormalityUpTo(benchmark::State& state) {
  const MonomialIdeal ideal(3, {{2, 0, 3}, {3, 1, 0}, {0, 3, 0}, {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(IsNormalUpTo(ideal, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_NormalityUpTo)->Arg(2)->Arg(3);

void BM_NtfCauc(benchmark::State& state) {
  const Clutter c = CompleteAdmissibleUniformClutter(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(IsNtfUpTo(c, 3));
}
BENCHMARK(BM_NtfCauc)->Arg(2)->Arg(3);

void BM_PowerEdgeIdeal(benchmark::State& state) {
  const MonomialIdeal ideal = EdgeIdeal(CompleteAdmissibleUniformClutter(3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(Power(ideal, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PowerEdgeIdeal)->Arg(2)->Arg(3);

void BM_PowerMembershipSearch(benchmark::State& state) {
  const MonomialIdeal ideal = EdgeIdeal(CompleteAdmissibleUniformClutter(3, 3));
  const std::vector<int> a(ideal.num_variables(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PowerMembershipBySearch(ideal, a, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_PowerMembershipSearch)->Arg(2)->Arg(4);

}  // namespace
}  // namespace clutterlab
