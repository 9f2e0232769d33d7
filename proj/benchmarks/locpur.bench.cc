// Copyright 2026 The locpur Authors
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

#include <vector>

#include "benchmark/benchmark.h"

#include "locpur/entanglement.h"
#include "locpur/filter.h"
#include "locpur/optimize.h"
#include "locpur/rng.h"

using namespace locpur;

static void BM_objective_evaluate(benchmark::State &state) {
    auto rho = random_mixed({2, 2}, 4, 0.05, 1);
    FilterObjective objective(rho, fidelity_targets({2, 2}));
    Rng rng(2);
    FilterParams params(filter_param_count({2, 2}));
    for (double &x : params) {
        x = rng.normal();
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(objective(params));
    }
}
BENCHMARK(BM_objective_evaluate);

static void BM_apply_filter(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    auto rho = random_mixed({n, n}, n * n, 0.0, 3);
    Rng rng(4);
    auto f = LocalFilter::make(rng.complex_gaussian(n, n), rng.complex_gaussian(n, n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_filter(f, rho));
    }
}
BENCHMARK(BM_apply_filter)->Arg(2)->Arg(3);

static void BM_ppt_min_eigenvalue(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    auto rho = random_mixed({n, n}, n * n, 0.0, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ppt_min_eigenvalue(rho));
    }
}
BENCHMARK(BM_ppt_min_eigenvalue)->Arg(2)->Arg(3);

static void BM_certifier_check(benchmark::State &state) {
    PurificationCertifier certifier(random_mixed({2, 2}, 3, 0.05, 6));
    Rng rng(7);
    auto f = LocalFilter::make(rng.complex_gaussian(2, 2), rng.complex_gaussian(2, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(certifier.check(f));
    }
}
BENCHMARK(BM_certifier_check);

static void BM_maximize_fidelity_werner(benchmark::State &state) {
    auto rho = werner_state(0.75);
    OptimizerConfig config;
    config.restarts = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_fidelity(rho, config));
    }
}
BENCHMARK(BM_maximize_fidelity_werner)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
