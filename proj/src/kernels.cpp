#include "banditdp/kernels.hpp"

#include <exception>
#include <string>

#ifdef BANDITDP_OMP
#include <omp.h>
#endif

#include "banditdp/engine.hpp"
#include "banditdp/rng.hpp"

namespace banditdp {

namespace {

RunResult run_one(const Dataset& dataset, const std::vector<Arm>& arms, const std::vector<SimConfig>& grid,
                  const RunTask& task, std::uint64_t master_seed) {
    const SimConfig& cfg = grid.at(task.cell);
    return run_simulation(dataset, arms, cfg, derive_run_seed(master_seed, static_cast<std::uint64_t>(task.repetition)),
                          RunOptions{.record_steps = false});
}

std::string task_context(const std::vector<SimConfig>& grid, const RunTask& task) {
    const auto& c = grid.at(task.cell);
    return "cell " + std::to_string(task.cell) + " (" + describe(c.policy) + ", " + to_string(c.strategy) +
           ", ratio " + std::to_string(c.effort_ratio) + "), repetition " + std::to_string(task.repetition);
}

}  // namespace

std::vector<RunTask> expand_tasks(const std::vector<SimConfig>& grid) {
    std::vector<RunTask> tasks;
    for (std::size_t c = 0; c < grid.size(); ++c)
        for (int r = 0; r < grid[c].repetitions; ++r) tasks.push_back({c, r});
    return tasks;
}

std::vector<RunResult> run_tasks_serial(const Dataset& dataset, const std::vector<Arm>& arms,
                                        const std::vector<SimConfig>& grid, const std::vector<RunTask>& tasks,
                                        std::uint64_t master_seed) {
    std::vector<RunResult> out;
    out.reserve(tasks.size());
    for (const auto& t : tasks) {
        try {
            out.push_back(run_one(dataset, arms, grid, t, master_seed));
        } catch (const std::exception& e) {
            throw std::runtime_error(task_context(grid, t) + ": " + e.what());
        }
    }
    return out;
}

std::vector<RunResult> run_tasks_parallel(const Dataset& dataset, const std::vector<Arm>& arms,
                                          const std::vector<SimConfig>& grid, const std::vector<RunTask>& tasks,
                                          std::uint64_t master_seed, int jobs) {
    std::vector<RunResult> out(tasks.size());
    std::vector<std::string> errors(tasks.size());
    const auto count = static_cast<std::int64_t>(tasks.size());

#ifdef BANDITDP_OMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
    (void)jobs;
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            out[i] = run_one(dataset, arms, grid, tasks[i], master_seed);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }

    // report the first failing task in task order, as the serial path would
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty()) throw std::runtime_error(task_context(grid, tasks[i]) + ": " + errors[i]);
    return out;
}

int max_parallel_jobs() {
#ifdef BANDITDP_OMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace banditdp
