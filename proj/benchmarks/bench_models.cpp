#include <benchmark/benchmark.h>

#include "co2cast/forest.hpp"
#include "co2cast/linear.hpp"
#include "co2cast/pipeline.hpp"
#include "co2cast/svr.hpp"
#include "co2cast/tree.hpp"

#include <cmath>

namespace {

using namespace co2cast;

// 59-point series shaped like a per-capita emission record: rise, dip, plateau
Dataset emission_like(std::size_t n) {
    Dataset d;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n);
        d.xs.push_back(1960.0 + static_cast<double>(i));
        d.ys.push_back(11.0 + 7.0 * std::sin(t * 2.2) + 0.4 * std::cos(t * 31.0));
    }
    return d;
}

EmissionSeries emission_series(std::size_t n) {
    const Dataset d = emission_like(n);
    EmissionSeries s;
    s.country_code = "BEN";
    for (std::size_t i = 0; i < n; ++i) {
        s.points.push_back({static_cast<int>(d.xs[i]), d.ys[i]});
    }
    return s;
}

void BM_FitLinear(benchmark::State& state) {
    const Dataset d = emission_like(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_linear(d));
    }
}
BENCHMARK(BM_FitLinear)->Arg(59)->Arg(590);

void BM_FitTree(benchmark::State& state) {
    const Dataset d = emission_like(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_tree(d));
    }
}
BENCHMARK(BM_FitTree)->Arg(59)->Arg(590);

void BM_FitForest(benchmark::State& state) {
    const Dataset d = emission_like(59);
    const int n_trees = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_forest(d, n_trees, true, 42));
    }
}
BENCHMARK(BM_FitForest)->Arg(10)->Arg(100);

void BM_FitSvr(benchmark::State& state) {
    const Dataset d = emission_like(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_svr(d));
    }
}
BENCHMARK(BM_FitSvr)->Arg(59)->Arg(236);

void BM_Pipeline(benchmark::State& state) {
    const EmissionSeries series = emission_series(59);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pipeline(series, {}));
    }
}
BENCHMARK(BM_Pipeline);

} // namespace

BENCHMARK_MAIN();
