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

#include "progkit/lattice.hpp"

#include <benchmark/benchmark.h>

using namespace progkit;

static void BM_EnumerateDisk(benchmark::State& state) {
    const long r = state.range(0);
    RatMat g = RatMat::identity(2);
    for (Rat& q : g.a) q /= r * r;
    const SymmetricBody disk = SymmetricBody::ellipsoid(std::move(g));
    const RatVec center(2, Rat(0));
    for (auto _ : state) {
        const LatticePointSet pts = enumerate_lattice(disk, center);
        benchmark::DoNotOptimize(pts.size());
    }
    state.SetComplexityN(r);
}
BENCHMARK(BM_EnumerateDisk)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_EnumerateEllipsoid4d(benchmark::State& state) {
    RatMat g = RatMat::identity(4);
    g(0, 1) = Rat(1, 3);
    g(1, 0) = Rat(1, 3);
    g(2, 3) = Rat(1, 5);
    g(3, 2) = Rat(1, 5);
    const Rat scale = make_rat(1, state.range(0));
    for (Rat& q : g.a) q *= scale;
    const SymmetricBody body = SymmetricBody::ellipsoid(std::move(g));
    const RatVec center(4, Rat(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_lattice(body, center));
    }
}
BENCHMARK(BM_EnumerateEllipsoid4d)->Arg(4)->Arg(9)->Arg(16);

static void BM_EnumerateBoxScan(benchmark::State& state) {
    const long r = state.range(0);
    RatMat f(3, 2);
    f(0, 0) = make_rat(1, r);
    f(1, 1) = make_rat(1, r);
    f(2, 0) = make_rat(1, r);
    f(2, 1) = make_rat(1, r);
    const SymmetricBody hex = SymmetricBody::polytope(std::move(f));
    const RatVec center(2, Rat(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_lattice(hex, center));
    }
}
BENCHMARK(BM_EnumerateBoxScan)->RangeMultiplier(2)->Range(4, 64);

BENCHMARK_MAIN();
