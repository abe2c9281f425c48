// Serial reference vs OpenMP runner on a synthetic grid.
//
//   ./build/bench/bench_kernels --benchmark_counters_tabular=true

#include <map>

#include <benchmark/benchmark.h>

#include "banditdp/kernels.hpp"
#include "banditdp/synthetic.hpp"

namespace {

using namespace banditdp;

struct Workload {
    SyntheticData data;
    std::vector<SimConfig> grid;
    std::vector<RunTask> tasks;
};

const Workload& workload(std::size_t modules) {
    static std::map<std::size_t, Workload> cache;
    auto it = cache.find(modules);
    if (it != cache.end()) return it->second;

    Workload w;
    SyntheticSpec spec;
    spec.modules = modules;
    spec.arms = default_arm_qualities();
    w.data = make_synthetic(spec, 7);
    for (auto st : {Strategy::SmallestFirst, Strategy::LargestFirst, Strategy::PositiveFirst})
        for (double ratio : {0.1, 0.25, 0.5})
            for (PolicyChoice p : {PolicyChoice{EpsilonGreedy{0.1}}, PolicyChoice{Ucb{}}}) {
                SimConfig cfg;
                cfg.policy = p;
                cfg.strategy = st;
                cfg.effort_ratio = ratio;
                cfg.repetitions = 10;
                w.grid.push_back(cfg);
            }
    w.tasks = expand_tasks(w.grid);
    return cache.emplace(modules, std::move(w)).first->second;
}

void BM_Serial(benchmark::State& state) {
    const auto& w = workload(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_tasks_serial(w.data.dataset, w.data.arms, w.grid, w.tasks, 1));
    state.counters["runs/s"] =
        benchmark::Counter(static_cast<double>(w.tasks.size()), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Parallel(benchmark::State& state) {
    const auto& w = workload(static_cast<std::size_t>(state.range(0)));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_tasks_parallel(w.data.dataset, w.data.arms, w.grid, w.tasks, 1, jobs));
    state.counters["runs/s"] =
        benchmark::Counter(static_cast<double>(w.tasks.size()), benchmark::Counter::kIsIterationInvariantRate);
    state.counters["threads"] = jobs;
}

void parallel_args(benchmark::internal::Benchmark* b) {
    for (long modules : {300L, 2000L})
        for (int jobs = 1; jobs <= max_parallel_jobs(); jobs *= 2) b->Args({modules, jobs});
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(300)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
