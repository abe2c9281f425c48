#include "banditdp/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "banditdp/kernels.hpp"
#include "banditdp/outcome.hpp"
#include "banditdp/reward.hpp"

namespace banditdp {

double mean(const std::vector<double>& xs) {
    if (xs.empty()) throw ValidationError("mean of an empty list");
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
    if (xs.empty()) throw ValidationError("median of an empty list");
    std::sort(xs.begin(), xs.end());
    const auto n = xs.size();
    return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

double benchmark(const std::vector<double>& per_arm_values) {
    if (per_arm_values.empty()) throw ValidationError("benchmark needs at least one arm");
    return mean(per_arm_values);
}

double rdiff(double target, double baseline) {
    if (baseline == 0.0) throw ValidationError("rdiff baseline is zero");
    return 1.0 - target / baseline;
}

RelativeChange relative_change(double target, double baseline) {
    RelativeChange rc;
    rc.rdiff = rdiff(target, baseline);
    rc.change = target / baseline - 1.0;
    rc.direction = rc.change > 0.0 ? "higher" : rc.change < 0.0 ? "lower" : "equal";
    return rc;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw ValidationError("pearson inputs differ in length");
    if (xs.size() < 2) throw ValidationError("pearson needs at least two points");
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw ValidationError("pearson input has zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double static_auc(const Arm& arm, const Dataset& dataset) {
    validate_coverage(dataset, {arm});
    StreamingConfusion c;
    for (const auto& m : dataset.modules) c = record(c, classify(arm.predictions.at(m.id), m.defective));
    return auc(c);
}

double static_effort(const Arm& arm, const Dataset& dataset, double c, double ratio) {
    validate_coverage(dataset, {arm});
    double total = 0.0;
    for (const auto& m : dataset.modules) total += effort(m.size, arm.predictions.at(m.id), c, ratio);
    return total;
}

std::vector<std::size_t> ordinal_ranks(const std::vector<double>& values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<std::size_t> ranks(values.size());
    for (std::size_t r = 0; r < idx.size(); ++r) ranks[idx[r]] = r + 1;
    return ranks;
}

namespace {

void aggregate(CellSummary& cell) {
    std::vector<double> aucs;
    std::vector<double> raw, eff, found, tp, pos, t1, t2;
    for (const auto& r : cell.runs) {
        aucs.push_back(r.final_auc_vs_truth);
        raw.push_back(r.raw_auc_vs_truth);
        eff.push_back(r.total_effort);
        found.push_back(static_cast<double>(r.found_defects));
        tp.push_back(static_cast<double>(r.true_positive_predictions));
        pos.push_back(static_cast<double>(r.positive_predictions));
        t1.push_back(static_cast<double>(r.defects_overlooked_type1));
        t2.push_back(static_cast<double>(r.defects_overlooked_type2));
    }
    cell.mean_auc = mean(aucs);
    cell.min_auc = *std::min_element(aucs.begin(), aucs.end());
    cell.max_auc = *std::max_element(aucs.begin(), aucs.end());
    // keep the mean inside [min, max] despite rounding
    cell.mean_auc = std::clamp(cell.mean_auc, cell.min_auc, cell.max_auc);
    double ss = 0.0;
    for (double a : aucs) ss += (a - cell.mean_auc) * (a - cell.mean_auc);
    cell.stddev_auc = aucs.size() > 1 ? std::sqrt(ss / static_cast<double>(aucs.size() - 1)) : 0.0;
    cell.mean_raw_auc = mean(raw);
    cell.mean_effort = mean(eff);
    cell.mean_found_defects = mean(found);
    cell.mean_true_positives = mean(tp);
    cell.mean_positive_predictions = mean(pos);
    cell.mean_overlooked_type1 = mean(t1);
    cell.mean_overlooked_type2 = mean(t2);
}

}  // namespace

ExperimentSummary run_experiment(const Dataset& dataset, const std::vector<Arm>& arms,
                                 const std::vector<SimConfig>& grid, std::uint64_t master_seed,
                                 ExperimentOptions options) {
    if (grid.empty()) throw ValidationError("experiment grid is empty");
    if (arms.empty()) throw ValidationError("no arms");
    validate(dataset);
    validate_coverage(dataset, arms);
    for (const auto& cfg : grid) validate(cfg);

    ExperimentSummary summary;
    summary.dataset_name = options.dataset_name;
    summary.module_count = dataset.size();
    summary.defective_count = static_cast<std::size_t>(
        std::count_if(dataset.modules.begin(), dataset.modules.end(), [](const Module& m) { return m.defective; }));
    summary.master_seed = master_seed;

    const auto tasks = expand_tasks(grid);
    auto results = options.execution == Execution::Serial
                       ? run_tasks_serial(dataset, arms, grid, tasks, master_seed)
                       : run_tasks_parallel(dataset, arms, grid, tasks, master_seed, options.jobs);

    summary.cells.resize(grid.size());
    for (std::size_t c = 0; c < grid.size(); ++c) {
        summary.cells[c].config = grid[c];
        summary.cells[c].config.seed = master_seed;
        summary.cells[c].runs.resize(static_cast<std::size_t>(grid[c].repetitions));
    }
    for (std::size_t i = 0; i < tasks.size(); ++i)
        summary.cells[tasks[i].cell].runs[static_cast<std::size_t>(tasks[i].repetition)] = std::move(results[i]);

    std::vector<double> static_aucs, static_tps;
    for (const auto& arm : arms) {
        StaticArmSummary s;
        s.name = arm.name;
        s.auc = static_auc(arm, dataset);
        for (const auto& m : dataset.modules) {
            const bool pred = arm.predictions.at(m.id);
            if (pred) ++s.positive_predictions;
            if (pred && m.defective) ++s.true_positives;
        }
        static_aucs.push_back(s.auc);
        static_tps.push_back(static_cast<double>(s.true_positives));
        summary.arms.push_back(std::move(s));
    }
    summary.benchmark_auc = benchmark(static_aucs);
    summary.benchmark_true_positives = benchmark(static_tps);

    std::vector<double> ranked;
    for (auto& cell : summary.cells) {
        aggregate(cell);
        std::vector<double> efforts;
        for (std::size_t a = 0; a < arms.size(); ++a) {
            efforts.push_back(static_effort(arms[a], dataset, cell.config.effort_constant, cell.config.effort_ratio));
            summary.arms[a].effort_by_cell.push_back(efforts.back());
        }
        cell.benchmark_effort = benchmark(efforts);
        ranked.push_back(cell.mean_auc);
    }
    ranked.push_back(summary.benchmark_auc);
    const auto ranks = ordinal_ranks(ranked);
    for (std::size_t c = 0; c < summary.cells.size(); ++c) summary.cells[c].rank = ranks[c];
    summary.benchmark_rank = ranks.back();
    return summary;
}

}  // namespace banditdp
