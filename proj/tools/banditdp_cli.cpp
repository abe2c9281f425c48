// banditdp: bandit-based selection among defect-prediction models during sequential testing.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 runtime or data error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "banditdp/engine.hpp"
#include "banditdp/experiment.hpp"
#include "banditdp/io.hpp"
#include "banditdp/kernels.hpp"
#include "banditdp/rng.hpp"
#include "banditdp/serialize.hpp"
#include "banditdp/synthetic.hpp"

namespace fs = std::filesystem;
using namespace banditdp;

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimulateArgs {
    std::string dataset;
    std::string arms;
    std::string policy;
    std::optional<double> epsilon;
    std::string strategy;
    double effort_ratio = 0.0;
    double c = 1.0;
    double type2 = 0.2;
    double banp = 0.1;
    std::uint64_t seed = 0;
    std::string out;
};

struct ExperimentArgs {
    std::string config;
    std::string out;
    int jobs = 0;
    bool serial = false;
};

struct InspectArgs {
    std::string runs;
};

struct SynthArgs {
    std::size_t modules = 300;
    std::uint64_t seed = 1;
    std::string out;
};

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

int cmd_simulate(const SimulateArgs& a) {
    SimConfig cfg;
    if (a.policy == "ucb") {
        if (a.epsilon) throw UsageError("--epsilon cannot be combined with --policy ucb");
        cfg.policy = Ucb{};
    } else {
        cfg.policy = EpsilonGreedy{a.epsilon.value_or(0.0)};
    }
    cfg.strategy = parse_strategy(a.strategy);
    cfg.effort_ratio = a.effort_ratio;
    cfg.effort_constant = a.c;
    cfg.type2_prob = a.type2;
    cfg.banp_fraction = a.banp;
    cfg.seed = a.seed;
    cfg.repetitions = 1;
    try {
        validate(cfg);
    } catch (const ValidationError& e) {
        throw UsageError(e.what());
    }

    const auto dataset = load_dataset(a.dataset);
    const auto arms = load_arms(a.arms);
    validate_coverage(dataset, arms);

    // same seed as repetition 0 of an experiment with this master seed
    const auto run_seed = derive_run_seed(a.seed, 0);
    const auto result = run_simulation(dataset, arms, cfg, run_seed);

    fs::create_directories(a.out);
    const auto name = fs::path(a.dataset).stem().string();
    std::ostringstream run;
    const auto& cols = run_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) run << (i ? "," : "") << cols[i];
    run << '\n' << run_row(name, 0, cfg, 0, run_seed, result) << '\n';
    write_text(fs::path(a.out) / "run.csv", run.str());

    std::ostringstream steps;
    write_steps(steps, result, arms);
    write_text(fs::path(a.out) / "steps.csv", steps.str());

    nlohmann::json echo = {{"dataset", a.dataset}, {"arms", a.arms}, {"config", cfg}, {"run_seed", run_seed}};
    write_text(fs::path(a.out) / "config.json", echo.dump(2) + "\n");

    std::printf("final AUC      %.4f\n", result.final_auc_vs_truth);
    std::printf("total effort   %.2f\n", result.total_effort);
    std::printf("found defects  %llu\n", static_cast<unsigned long long>(result.found_defects));
    return 0;
}

int cmd_experiment(const ExperimentArgs& a) {
    const auto config = load_experiment_config(a.config);
    ExperimentOptions opts;
    opts.execution = a.serial ? Execution::Serial : Execution::Parallel;
    opts.jobs = a.jobs;

    std::vector<ExperimentSummary> summaries;
    for (const auto& spec : config.datasets) {
        const auto dataset = load_dataset(spec.modules);
        const auto arms = load_arms(spec.arms);
        validate_coverage(dataset, arms);
        opts.dataset_name = spec.name;
        std::cerr << "running " << spec.name << ": " << config.grid.size() << " cells x "
                  << config.grid.front().repetitions << " repetitions\n";
        summaries.push_back(run_experiment(dataset, arms, config.grid, config.master_seed, opts));
    }
    focus_cell_index(summaries, config.focus);  // reject a bad focus cell before writing anything
    for (const auto& p : write_report(summaries, config, a.out)) std::cout << p.string() << '\n';
    return 0;
}

int cmd_inspect(const InspectArgs& a) {
    std::ifstream in(a.runs);
    if (!in) throw std::runtime_error("cannot open " + a.runs);
    const auto rows = read_runs(in, a.runs);

    struct Acc {
        std::string label;
        int n = 0;
        double auc = 0.0, effort = 0.0, found = 0.0;
    };
    std::map<std::pair<std::string, std::size_t>, Acc> cells;
    for (const auto& r : rows) {
        auto& acc = cells[{r.dataset, r.cell}];
        acc.label = r.policy + " " + r.strategy + " " + std::to_string(r.effort_ratio).substr(0, 4);
        ++acc.n;
        acc.auc += r.final_auc;
        acc.effort += r.total_effort;
        acc.found += static_cast<double>(r.found_defects);
    }
    std::printf("%-12s %4s  %-24s %4s %8s %12s %8s\n", "dataset", "cell", "config", "runs", "AUC", "effort", "found");
    for (const auto& [key, acc] : cells)
        std::printf("%-12s %4zu  %-24s %4d %8.4f %12.1f %8.1f\n", key.first.c_str(), key.second, acc.label.c_str(),
                    acc.n, acc.auc / acc.n, acc.effort / acc.n, acc.found / acc.n);
    return 0;
}

int cmd_synth(const SynthArgs& a) {
    SyntheticSpec spec;
    spec.modules = a.modules;
    spec.arms = default_arm_qualities();
    const auto data = make_synthetic(spec, a.seed);
    fs::create_directories(a.out);
    std::ostringstream ds, arms;
    write_dataset(ds, data.dataset);
    std::vector<std::string> ids;
    for (const auto& m : data.dataset.modules) ids.push_back(m.id);
    write_arms(arms, data.arms, ids);
    write_text(fs::path(a.out) / "modules.csv", ds.str());
    write_text(fs::path(a.out) / "arms.csv", arms.str());
    std::cout << (fs::path(a.out) / "modules.csv").string() << '\n' << (fs::path(a.out) / "arms.csv").string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bandit-based selection of defect prediction models during sequential testing"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run one simulation and write its per-run files");
    simulate->add_option("--dataset", sim.dataset, "Module file (module_id,size,defective)")->required();
    simulate->add_option("--arms", sim.arms, "Arm prediction file (module_id,<arm>...)")->required();
    simulate->add_option("--policy", sim.policy, "Arm selection policy")
        ->required()
        ->check(CLI::IsMember({"egreedy", "ucb"}));
    simulate->add_option("--epsilon", sim.epsilon, "Exploration probability of egreedy (default 0)");
    simulate->add_option("--strategy", sim.strategy, "Test order")->required()->check(CLI::IsMember({"sf", "lf", "pf"}));
    simulate->add_option("--effort-ratio", sim.effort_ratio, "Effort on negative relative to positive predictions")
        ->required();
    simulate->add_option("--c", sim.c, "Effort constant")->capture_default_str();
    simulate->add_option("--type2", sim.type2, "Probability of Type 2 overlooking")->capture_default_str();
    simulate->add_option("--banp", sim.banp, "Fraction of leading modules forced positive")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "Master seed")->required();
    simulate->add_option("--out", sim.out, "Output directory")->required();

    ExperimentArgs exp;
    auto* experiment = app.add_subcommand("experiment", "Run a configured sweep and write the report");
    experiment->add_option("config", exp.config, "Experiment configuration (JSON)")->required();
    experiment->add_option("out", exp.out, "Output directory")->required();
    experiment->add_option("--jobs", exp.jobs, "Maximum worker threads (default: all)")->check(CLI::NonNegativeNumber);
    experiment->add_flag("--serial", exp.serial, "Use the single-threaded reference runner");

    InspectArgs ins;
    auto* inspect = app.add_subcommand("inspect", "Summarise a runs.csv file per grid cell");
    inspect->add_option("runs", ins.runs, "runs.csv written by experiment or simulate")->required();

    SynthArgs syn;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic module file and arm file");
    synth->add_option("--modules", syn.modules, "Number of modules")->capture_default_str();
    synth->add_option("--seed", syn.seed, "Generator seed")->capture_default_str();
    synth->add_option("--out", syn.out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*simulate) return cmd_simulate(sim);
        if (*experiment) return cmd_experiment(exp);
        if (*inspect) return cmd_inspect(ins);
        if (*synth) return cmd_synth(syn);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kUsageError;
}
