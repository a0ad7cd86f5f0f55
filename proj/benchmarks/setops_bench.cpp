// Copyright 2026 The progkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "progkit/rng.hpp"
#include "progkit/setops.hpp"

#include <benchmark/benchmark.h>

using namespace progkit;

namespace {

FiniteSet random_set(std::size_t n, std::uint64_t seed) {
    const CounterRng rng(seed, 0xbe);
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back({Rat(rng.uniform_int(i, -100000, 100000))});
    return FiniteSet::from_points(AmbientGroup{1, CoordKind::Integer}, std::move(pts));
}

} // namespace

static void BM_Sumset(benchmark::State& state) {
    const FiniteSet a = random_set(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        const FiniteSet aa = sumset(a, a);
        benchmark::DoNotOptimize(aa.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Sumset)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_Doubling(benchmark::State& state) {
    const FiniteSet a = random_set(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(doubling_constant(a));
    }
}
BENCHMARK(BM_Doubling)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
