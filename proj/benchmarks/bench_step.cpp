#include <benchmark/benchmark.h>

#include "sfac/experiment.hpp"
#include "sfac/parallel.hpp"
#include "sfac/spectral.hpp"
#include "sfac/stepper.hpp"

using namespace sfac;

namespace {

struct Bench {
    SolverConfig config;
    SpectralCache cache;
    Field u;

    Bench(int dim, std::size_t m)
        : config(make_config(dim, m)),
          cache(config.grid, config.orders, config.eps, config.tau),
          u(initial(dim, m)) {}

    static SolverConfig make_config(int dim, std::size_t m) {
        ExperimentConfig cfg;
        cfg.dim = dim;
        cfg.m = {m, m, m};
        cfg.eps = 0.1;
        cfg.alpha = {1.5, 1.5, 1.5};
        cfg.tau = 0.01;
        cfg.ic = IcKind::UniformRandom;
        return cfg.solver();
    }

    static Field initial(int dim, std::size_t m) {
        ExperimentConfig cfg;
        cfg.dim = dim;
        cfg.m = {m, m, m};
        cfg.ic = IcKind::UniformRandom;
        return build_initial_condition(cfg);
    }
};

void bm_strang_step(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    set_worker_count(static_cast<std::size_t>(state.range(2)));
    Bench b(dim, m);
    for (auto _ : state) {
        b.u = strang_step(b.u, b.cache, b.config);
        benchmark::DoNotOptimize(b.u.data.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(b.u.size()));
    set_worker_count(1);
}

void bm_linear_step(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    Bench b(dim, m);
    for (auto _ : state) {
        b.u = linear_step(b.u, b.cache);
        benchmark::DoNotOptimize(b.u.data.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(b.u.size()));
}

void bm_nonlinear_half_step(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    Bench b(2, m);
    for (auto _ : state) {
        nonlinear_half_step(b.u, b.config.tau);
        benchmark::DoNotOptimize(b.u.data.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(b.u.size()));
}

// {dim, m, workers}: interior sizes 255^2..1023^2 and 63^3..127^3
BENCHMARK(bm_strang_step)
    ->Args({2, 256, 1})
    ->Args({2, 512, 1})
    ->Args({2, 1024, 1})
    ->Args({2, 512, 2})
    ->Args({2, 512, 4})
    ->Args({3, 64, 1})
    ->Args({3, 128, 1})
    ->Unit(benchmark::kMillisecond);

BENCHMARK(bm_linear_step)
    ->Args({2, 256})
    ->Args({2, 512})
    ->Args({3, 64})
    ->Args({3, 128})
    ->Unit(benchmark::kMillisecond);

BENCHMARK(bm_nonlinear_half_step)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
