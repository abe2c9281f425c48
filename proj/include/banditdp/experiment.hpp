#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "banditdp/types.hpp"

namespace banditdp {

/// Aggregate of all repetitions of one grid cell.
struct CellSummary {
    SimConfig config;
    std::vector<RunResult> runs;  // in repetition order, without step logs

    double mean_auc = 0.0;
    double stddev_auc = 0.0;  // sample standard deviation, 0 for a single run
    double min_auc = 0.0;
    double max_auc = 0.0;
    double mean_raw_auc = 0.0;
    double mean_effort = 0.0;
    double mean_found_defects = 0.0;
    double mean_true_positives = 0.0;
    double mean_positive_predictions = 0.0;
    double mean_overlooked_type1 = 0.0;
    double mean_overlooked_type2 = 0.0;

    // Mean effort of the static arms under this cell's ratio and constant.
    double benchmark_effort = 0.0;
    std::size_t rank = 0;
};

/// An arm evaluated on its own, without any bandit.
struct StaticArmSummary {
    std::string name;
    double auc = 0.0;
    std::uint64_t true_positives = 0;
    std::uint64_t positive_predictions = 0;
    std::vector<double> effort_by_cell;  // static effort under each grid cell's ratio and constant
};

struct ExperimentSummary {
    std::string dataset_name;
    std::size_t module_count = 0;
    std::size_t defective_count = 0;
    std::uint64_t master_seed = 0;
    std::vector<CellSummary> cells;
    std::vector<StaticArmSummary> arms;
    double benchmark_auc = 0.0;
    double benchmark_true_positives = 0.0;
    std::size_t benchmark_rank = 0;  // ranked together with the cells
};

enum class Execution { Serial, Parallel };

struct ExperimentOptions {
    Execution execution = Execution::Parallel;
    int jobs = 0;
    std::string dataset_name = "dataset";
};

/// Runs every cell `repetitions` times with seeds derived from (master_seed, repetition),
/// aggregates per cell and ranks the cells together with the benchmark.
ExperimentSummary run_experiment(const Dataset& dataset, const std::vector<Arm>& arms,
                                 const std::vector<SimConfig>& grid, std::uint64_t master_seed,
                                 ExperimentOptions options = {});

/// Expected metric of picking one of the arms uniformly: the arithmetic mean.
double benchmark(const std::vector<double>& per_arm_values);

/// 1 - target / baseline.
double rdiff(double target, double baseline);

/// Signed relative change target / baseline - 1, with a word for its direction.
struct RelativeChange {
    double rdiff = 0.0;
    double change = 0.0;
    std::string direction;  // "higher", "lower" or "equal"
};
RelativeChange relative_change(double target, double baseline);

/// Sample Pearson correlation.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

/// Balanced AUC of the arm's predictions against the dataset labels.
double static_auc(const Arm& arm, const Dataset& dataset);

/// Effort of testing the whole dataset under the arm's predictions.
double static_effort(const Arm& arm, const Dataset& dataset, double c, double ratio);

/// Ordinal ranks (1 = largest). Ties keep input order, so the result is a permutation of 1..n.
std::vector<std::size_t> ordinal_ranks(const std::vector<double>& values);

double mean(const std::vector<double>& xs);
double median(std::vector<double> xs);

}  // namespace banditdp
