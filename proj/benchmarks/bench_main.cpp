// Copyright 2026 The catint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <string>
#include <vector>

#include "catint/elemfn.hpp"
#include "catint/integrator.hpp"
#include "catint/quiver.hpp"
#include "catint/step_function.hpp"

using namespace catint;

namespace {

StepFunction comb(int n, double shift) {
    std::vector<Piece> pieces;
    for (int i = 0; i < n; ++i) {
        const double lo = shift + double(i) / n, hi = lo + 0.5 / n;
        pieces.push_back({Box{{lo, hi}}, double(i % 7) - 3.0});
    }
    return StepFunction(Box{{0, 2}}, pieces);
}

// Linear A_n with all n-2 relations.
GentlePresentation linear(int n) {
    std::vector<std::string> vs;
    std::vector<Arrow> as;
    RelationSet rels;
    for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i) as.push_back({"a" + std::to_string(i), vs[i - 1], vs[i]});
    for (int i = 1; i + 1 < n; ++i) rels.insert({as[i - 1].name, as[i].name});
    return require_gentle(Quiver("A" + std::to_string(n), vs, as), rels);
}

void BM_StepCombine(benchmark::State& state) {
    const int n = int(state.range(0));
    const StepFunction f = comb(n, 0.0), g = comb(n, 0.25 / n);
    for (auto _ : state) benchmark::DoNotOptimize(linear_combine(2.0, f, -1.0, g));
    state.SetComplexityN(n);
}
BENCHMARK(BM_StepCombine)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_StepNorm(benchmark::State& state) {
    const StepFunction f = comb(int(state.range(0)), 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(p_norm(f, 2.0));
}
BENCHMARK(BM_StepNorm)->Range(8, 1024);

void BM_Enclosure(benchmark::State& state) {
    const double tol = std::pow(10.0, -double(state.range(0)));
    const std::vector<Interval> pieces{{1, 2}};
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_enclosure([](double t) { return 1.0 / t; }, {1, 2}, pieces, tol));
}
BENCHMARK(BM_Enclosure)->DenseRange(3, 9, 3);

void BM_KConstant(benchmark::State& state) {
    const double tol = std::pow(10.0, -double(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(K_constant(tol));
}
BENCHMARK(BM_KConstant)->DenseRange(3, 9, 3);

void BM_SinCat(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sin_cat(2.5, 1e-9));
}
BENCHMARK(BM_SinCat);

void BM_Gldim(benchmark::State& state) {
    const GentlePresentation p = linear(int(state.range(0)));
    const auto method = static_cast<GlDimMethod>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(global_dimension(p, method));
}
BENCHMARK(BM_Gldim)->ArgsProduct({{4, 16, 64}, {0, 1, 2}});

}  // namespace
BENCHMARK_MAIN();
