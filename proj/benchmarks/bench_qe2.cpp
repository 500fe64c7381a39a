// Copyright 2026 The qe2 Authors
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

#include "qe2/bosonization.hpp"
#include "qe2/dual_group.hpp"
#include "qe2/relations.hpp"

namespace {

using namespace qe2;

void BM_RelationRegistry(benchmark::State& state) {
  const QParameter q({0.3, 0.4});
  const auto registry = relation_registry();
  for (auto _ : state) {
    int passed = 0;
    for (const auto& rec : registry) passed += check_exact(rec, q).passed;
    benchmark::DoNotOptimize(passed);
  }
  state.SetItemsProcessed(state.iterations() * registry.size());
}
BENCHMARK(BM_RelationRegistry)->Unit(benchmark::kMillisecond);

void BM_SymbolTable(benchmark::State& state) {
  QexpParams p;
  p.fourier_samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_symbol_table(1, p));
}
BENCHMARK(BM_SymbolTable)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMicrosecond);

void BM_ApplyFhat(benchmark::State& state) {
  const Evaluator eval{QexpParams{}};
  const DualUnitaryHandle h;
  const ComplexVector e = ComplexVector::basis(BasisIndex(2 * kDimL));
  apply_Fhat(e, false, h, eval);  // warm the symbol cache
  for (auto _ : state) benchmark::DoNotOptimize(apply_Fhat(e, false, h, eval));
}
BENCHMARK(BM_ApplyFhat)->Unit(benchmark::kMicrosecond);

void BM_BraidedPentagon(benchmark::State& state) {
  const Evaluator eval{QexpParams{}};
  const ComplexVector e = ComplexVector::basis(BasisIndex(3 * kDimL));
  braided_pentagon_residual(e, DualUnitaryHandle{}, eval);
  for (auto _ : state) benchmark::DoNotOptimize(braided_pentagon_residual(e, DualUnitaryHandle{}, eval));
}
BENCHMARK(BM_BraidedPentagon)->Unit(benchmark::kMillisecond);

void BM_OrdinaryPentagon(benchmark::State& state) {
  const Evaluator eval{QexpParams{}};
  const ComplexVector e = ComplexVector::basis(BasisIndex(9));
  ordinary_pentagon_residual(e, WtildeHandle{}, eval);
  for (auto _ : state) benchmark::DoNotOptimize(ordinary_pentagon_residual(e, WtildeHandle{}, eval));
}
BENCHMARK(BM_OrdinaryPentagon)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
