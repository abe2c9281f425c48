#pragma once

#include <cstdint>
#include <vector>

#include "banditdp/types.hpp"

namespace banditdp {

/// One repetition of one grid cell.
struct RunTask {
    std::size_t cell = 0;
    int repetition = 0;
};

/// Every (cell, repetition) pair of the grid in cell-major order.
std::vector<RunTask> expand_tasks(const std::vector<SimConfig>& grid);

/// Reference implementation: runs the tasks one after another.
/// Result i belongs to task i; step logs are not kept.
std::vector<RunResult> run_tasks_serial(const Dataset& dataset, const std::vector<Arm>& arms,
                                        const std::vector<SimConfig>& grid, const std::vector<RunTask>& tasks,
                                        std::uint64_t master_seed);

/// OpenMP version of run_tasks_serial; produces identical output for any thread count.
/// jobs <= 0 uses the OpenMP default.
std::vector<RunResult> run_tasks_parallel(const Dataset& dataset, const std::vector<Arm>& arms,
                                          const std::vector<SimConfig>& grid, const std::vector<RunTask>& tasks,
                                          std::uint64_t master_seed, int jobs = 0);

/// Number of worker threads available to run_tasks_parallel (1 without OpenMP).
int max_parallel_jobs();

}  // namespace banditdp
