#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "banditdp/experiment.hpp"
#include "banditdp/types.hpp"

namespace banditdp {

/// Malformed input file; the message names the file and line.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Bad experiment configuration (unknown keys, wrong types, out-of-range values).
class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Dataset file: header `module_id,size,defective`, one row per module, defective in {0,1}.
Dataset read_dataset(std::istream& in, const std::string& source = "<stream>");
Dataset load_dataset(const std::filesystem::path& path);
void write_dataset(std::ostream& out, const Dataset& dataset);

// Arm file: header `module_id,<arm1>,<arm2>,...`, cells in {0,1}.
std::vector<Arm> read_arms(std::istream& in, const std::string& source = "<stream>");
std::vector<Arm> load_arms(const std::filesystem::path& path);
void write_arms(std::ostream& out, const std::vector<Arm>& arms, const std::vector<std::string>& module_order);

/// One dataset entry of an experiment configuration.
struct DatasetSpec {
    std::string name;
    std::filesystem::path modules;
    std::filesystem::path arms;
};

/// Cell whose results feed the effort and found-defect comparison tables.
struct FocusCell {
    PolicyChoice policy = EpsilonGreedy{0.0};
    Strategy strategy = Strategy::PositiveFirst;
    double effort_ratio = 0.1;
};

struct ExperimentConfig {
    std::vector<DatasetSpec> datasets;
    std::vector<SimConfig> grid;
    std::uint64_t master_seed = 0;
    std::optional<FocusCell> focus;
    std::optional<std::string> baseline_arm;
};

/// Parses the JSON experiment configuration. Relative dataset paths resolve against `base_dir`.
ExperimentConfig parse_experiment_config(const std::string& text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Canonical JSON form of a configuration (defaults made explicit).
std::string experiment_config_json(const ExperimentConfig& config);

/// Index of the focus cell: the configured one, else the best mean AUC across datasets.
std::size_t focus_cell_index(const std::vector<ExperimentSummary>& summaries, const std::optional<FocusCell>& focus);

/// Fixed column order of runs.csv.
const std::vector<std::string>& run_columns();

/// One runs.csv row (no trailing newline). Floats are written with 17 significant digits.
std::string run_row(const std::string& dataset_name, std::size_t cell_index, const SimConfig& config,
                    int repetition, std::uint64_t seed, const RunResult& run);

void write_steps(std::ostream& out, const RunResult& run, const std::vector<Arm>& arms);

struct RunRow {
    std::string dataset;
    std::size_t cell = 0;
    std::string policy;
    std::string strategy;
    double effort_ratio = 0.0;
    int repetition = 0;
    std::uint64_t seed = 0;
    double final_auc = 0.0;
    double raw_auc = 0.0;
    double total_effort = 0.0;
    std::uint64_t found_defects = 0;
    std::uint64_t true_positive_predictions = 0;
};

std::vector<RunRow> read_runs(std::istream& in, const std::string& source = "<stream>");

/// Writes runs.csv, cells.csv, tables.md and config.json into out_dir (created if needed).
/// Returns the written paths.
std::vector<std::filesystem::path> write_report(const std::vector<ExperimentSummary>& summaries,
                                                const ExperimentConfig& config,
                                                const std::filesystem::path& out_dir);
std::vector<std::filesystem::path> write_report(const ExperimentSummary& summary, const ExperimentConfig& config,
                                                const std::filesystem::path& out_dir);

/// Markdown tables: average AUC ranking, effort RDIFF between strategies, per-dataset AUC ranks,
/// effort RDIFF against the baseline arm, found defects against the arm average, correlations.
void write_tables(std::ostream& out, const std::vector<ExperimentSummary>& summaries, const ExperimentConfig& config);

}  // namespace banditdp
