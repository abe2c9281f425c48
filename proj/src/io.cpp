#include "banditdp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "banditdp/rng.hpp"
#include "banditdp/serialize.hpp"

namespace banditdp {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::string where(const std::string& source, std::size_t line) { return source + ":" + std::to_string(line); }

std::optional<double> to_double(const std::string& s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
    return v;
}

std::optional<std::uint64_t> to_u64(const std::string& s) {
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
    return v;
}

std::optional<bool> to_binary(const std::string& s) {
    if (s == "1") return true;
    if (s == "0") return false;
    return std::nullopt;
}

// Reads the next non-blank line, counting line numbers.
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!trim(line).empty()) return true;
    }
    return false;
}

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return in;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

Dataset read_dataset(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError(source + ": empty dataset file");
    const auto header = split_row(line);
    if (header != std::vector<std::string>{"module_id", "size", "defective"})
        throw ParseError(where(source, lineno) + ": expected header 'module_id,size,defective'");

    Dataset ds;
    std::map<std::string, std::size_t> first_seen;
    while (next_line(in, line, lineno)) {
        const auto cells = split_row(line);
        if (cells.size() != 3)
            throw ParseError(where(source, lineno) + ": expected 3 fields, found " + std::to_string(cells.size()));
        Module m;
        m.id = cells[0];
        if (m.id.empty()) throw ParseError(where(source, lineno) + ": empty module id");
        const auto size = to_double(cells[1]);
        if (!size || !(*size > 0.0) || !std::isfinite(*size))
            throw ParseError(where(source, lineno) + ": size of '" + m.id + "' must be a positive number, got '" +
                             cells[1] + "'");
        m.size = *size;
        const auto def = to_binary(cells[2]);
        if (!def)
            throw ParseError(where(source, lineno) + ": defective flag of '" + m.id + "' must be 0 or 1, got '" +
                             cells[2] + "'");
        m.defective = *def;
        if (auto [it, fresh] = first_seen.emplace(m.id, lineno); !fresh)
            throw ParseError(where(source, lineno) + ": duplicate module id '" + m.id + "' (first seen on line " +
                             std::to_string(it->second) + ")");
        ds.modules.push_back(std::move(m));
    }
    if (ds.modules.empty()) throw ParseError(source + ": dataset has no modules");
    return ds;
}

Dataset load_dataset(const fs::path& path) {
    auto in = open_input(path);
    return read_dataset(in, path.string());
}

void write_dataset(std::ostream& out, const Dataset& dataset) {
    out << "module_id,size,defective\n";
    for (const auto& m : dataset.modules) out << m.id << ',' << fmt17(m.size) << ',' << (m.defective ? 1 : 0) << '\n';
}

std::vector<Arm> read_arms(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError(source + ": empty arm file");
    const auto header = split_row(line);
    if (header.size() < 2 || header[0] != "module_id")
        throw ParseError(where(source, lineno) + ": expected header 'module_id,<arm>,...'");

    std::vector<Arm> arms;
    std::set<std::string> names;
    for (std::size_t c = 1; c < header.size(); ++c) {
        if (header[c].empty()) throw ParseError(where(source, lineno) + ": empty arm name in column " + std::to_string(c + 1));
        if (!names.insert(header[c]).second)
            throw ParseError(where(source, lineno) + ": duplicate arm name '" + header[c] + "'");
        arms.push_back(Arm{header[c], {}});
    }

    while (next_line(in, line, lineno)) {
        const auto cells = split_row(line);
        if (cells.size() != header.size())
            throw ParseError(where(source, lineno) + ": expected " + std::to_string(header.size()) + " fields, found " +
                             std::to_string(cells.size()));
        const auto& id = cells[0];
        if (id.empty()) throw ParseError(where(source, lineno) + ": empty module id");
        for (std::size_t c = 1; c < cells.size(); ++c) {
            const auto v = to_binary(cells[c]);
            if (!v)
                throw ParseError(where(source, lineno) + ", column " + std::to_string(c + 1) + " ('" + header[c] +
                                 "'): prediction must be 0 or 1, got '" + cells[c] + "'");
            if (!arms[c - 1].predictions.emplace(id, *v).second)
                throw ParseError(where(source, lineno) + ": duplicate module id '" + id + "'");
        }
    }
    return arms;
}

std::vector<Arm> load_arms(const fs::path& path) {
    auto in = open_input(path);
    return read_arms(in, path.string());
}

void write_arms(std::ostream& out, const std::vector<Arm>& arms, const std::vector<std::string>& module_order) {
    out << "module_id";
    for (const auto& a : arms) out << ',' << a.name;
    out << '\n';
    for (const auto& id : module_order) {
        out << id;
        for (const auto& a : arms) out << ',' << (a.predictions.at(id) ? 1 : 0);
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// experiment configuration

namespace {

const std::set<std::string> kConfigKeys = {"master_seed",  "repetitions", "effort_constant", "type2_prob",
                                           "banp_fraction", "strategies",  "effort_ratios",   "epsilons",
                                           "ucb",           "datasets",    "focus",           "baseline_arm"};

template <typename T>
T config_value(const json& j, const std::string& key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError("config key '" + key + "': " + e.what());
    }
}

PolicyChoice parse_focus_policy(const json& j) {
    const auto type = config_value<std::string>(j, "policy");
    if (type == "ucb") {
        if (j.contains("epsilon")) throw ConfigError("focus: epsilon given with policy ucb");
        return Ucb{};
    }
    if (type == "egreedy") return EpsilonGreedy{j.contains("epsilon") ? config_value<double>(j, "epsilon") : 0.0};
    throw ConfigError("focus: unknown policy '" + type + "'");
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text, const fs::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    std::vector<std::string> unknown;
    for (const auto& [key, _] : j.items())
        if (!kConfigKeys.contains(key)) unknown.push_back(key);
    if (!unknown.empty()) {
        std::string msg = "unknown config keys:";
        for (const auto& k : unknown) msg += " " + k;
        throw ConfigError(msg);
    }

    ExperimentConfig cfg;
    cfg.master_seed = j.contains("master_seed") ? config_value<std::uint64_t>(j, "master_seed") : 0;

    SimConfig base;
    base.repetitions = j.contains("repetitions") ? config_value<int>(j, "repetitions") : 20;
    base.effort_constant = j.contains("effort_constant") ? config_value<double>(j, "effort_constant") : 1.0;
    base.type2_prob = j.contains("type2_prob") ? config_value<double>(j, "type2_prob") : 0.2;
    base.banp_fraction = j.contains("banp_fraction") ? config_value<double>(j, "banp_fraction") : 0.1;
    base.seed = cfg.master_seed;

    std::vector<Strategy> strategies{Strategy::SmallestFirst, Strategy::LargestFirst, Strategy::PositiveFirst};
    if (j.contains("strategies")) {
        strategies.clear();
        for (const auto& s : config_value<std::vector<std::string>>(j, "strategies")) {
            try {
                strategies.push_back(parse_strategy(s));
            } catch (const ValidationError& e) {
                throw ConfigError(std::string("config key 'strategies': ") + e.what());
            }
        }
    }
    auto ratios = j.contains("effort_ratios") ? config_value<std::vector<double>>(j, "effort_ratios")
                                               : std::vector<double>{0.1, 0.25, 0.5};
    auto epsilons = j.contains("epsilons") ? config_value<std::vector<double>>(j, "epsilons")
                                           : std::vector<double>{0.0, 0.1, 0.2, 0.3};
    const bool ucb = j.contains("ucb") ? config_value<bool>(j, "ucb") : true;

    std::vector<PolicyChoice> policies;
    for (double e : epsilons) policies.emplace_back(EpsilonGreedy{e});
    if (ucb) policies.emplace_back(Ucb{});
    if (policies.empty() || strategies.empty() || ratios.empty())
        throw ConfigError("experiment grid is empty (need at least one policy, strategy and effort ratio)");

    for (const auto& p : policies)
        for (auto s : strategies)
            for (double r : ratios) {
                SimConfig c = base;
                c.policy = p;
                c.strategy = s;
                c.effort_ratio = r;
                try {
                    validate(c);
                } catch (const ValidationError& e) {
                    throw ConfigError(std::string("invalid grid cell: ") + e.what());
                }
                cfg.grid.push_back(c);
            }

    if (!j.contains("datasets") || !j.at("datasets").is_array() || j.at("datasets").empty())
        throw ConfigError("config key 'datasets' must be a non-empty list");
    std::set<std::string> names;
    for (const auto& d : j.at("datasets")) {
        DatasetSpec spec;
        spec.name = config_value<std::string>(d, "name");
        if (!names.insert(spec.name).second) throw ConfigError("duplicate dataset name '" + spec.name + "'");
        fs::path modules = config_value<std::string>(d, "modules");
        fs::path arms = config_value<std::string>(d, "arms");
        spec.modules = modules.is_relative() ? base_dir / modules : modules;
        spec.arms = arms.is_relative() ? base_dir / arms : arms;
        cfg.datasets.push_back(std::move(spec));
    }

    if (j.contains("focus")) {
        const auto& f = j.at("focus");
        FocusCell focus;
        focus.policy = parse_focus_policy(f);
        try {
            focus.strategy = parse_strategy(config_value<std::string>(f, "strategy"));
        } catch (const ValidationError& e) {
            throw ConfigError(std::string("focus: ") + e.what());
        }
        focus.effort_ratio = config_value<double>(f, "effort_ratio");
        cfg.focus = focus;
    }
    if (j.contains("baseline_arm")) cfg.baseline_arm = config_value<std::string>(j, "baseline_arm");
    return cfg;
}

ExperimentConfig load_experiment_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_experiment_config(ss.str(), path.parent_path());
}

std::string experiment_config_json(const ExperimentConfig& config) {
    json j;
    j["master_seed"] = config.master_seed;
    j["grid"] = config.grid;
    json ds = json::array();
    for (const auto& d : config.datasets)
        ds.push_back({{"name", d.name}, {"modules", d.modules.string()}, {"arms", d.arms.string()}});
    j["datasets"] = ds;
    if (config.focus)
        j["focus"] = {{"policy", json(config.focus->policy)},
                      {"strategy", to_string(config.focus->strategy)},
                      {"effort_ratio", config.focus->effort_ratio}};
    if (config.baseline_arm) j["baseline_arm"] = *config.baseline_arm;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// per-run metrics

const std::vector<std::string>& run_columns() {
    static const std::vector<std::string> cols = {
        "dataset",          "cell",           "policy",         "epsilon",
        "strategy",         "effort_ratio",   "effort_constant", "type2_prob",
        "banp_fraction",    "repetition",     "seed",           "final_auc",
        "raw_auc",          "total_effort",   "found_defects",  "true_positive_predictions",
        "positive_predictions", "overlooked_type1", "overlooked_type2", "warmup_steps",
        "per_arm_final_auc"};
    return cols;
}

std::string run_row(const std::string& dataset_name, std::size_t cell_index, const SimConfig& config,
                    int repetition, std::uint64_t seed, const RunResult& run) {
    std::ostringstream os;
    const auto* eg = std::get_if<EpsilonGreedy>(&config.policy);
    os << dataset_name << ',' << cell_index << ',' << (eg ? "egreedy" : "ucb") << ',' << (eg ? fmt17(eg->epsilon) : "")
       << ',' << to_string(config.strategy) << ',' << fmt17(config.effort_ratio) << ','
       << fmt17(config.effort_constant) << ',' << fmt17(config.type2_prob) << ',' << fmt17(config.banp_fraction)
       << ',' << repetition << ',' << seed << ',' << fmt17(run.final_auc_vs_truth) << ','
       << fmt17(run.raw_auc_vs_truth) << ',' << fmt17(run.total_effort) << ',' << run.found_defects << ','
       << run.true_positive_predictions << ',' << run.positive_predictions << ',' << run.defects_overlooked_type1
       << ',' << run.defects_overlooked_type2 << ',' << run.warmup_steps << ',';
    for (std::size_t i = 0; i < run.per_arm_final_auc.size(); ++i)
        os << (i ? ";" : "") << fmt17(run.per_arm_final_auc[i]);
    return os.str();
}

void write_steps(std::ostream& out, const RunResult& run, const std::vector<Arm>& arms) {
    out << "step,module_id,selected_arm,arm_prediction,effective_prediction,observed,true_label,overlook,effort";
    for (const auto& a : arms) out << ",auc_" << a.name;
    out << '\n';
    for (const auto& s : run.steps) {
        out << s.step_index << ',' << s.module_id << ',' << (s.selected_arm ? arms.at(*s.selected_arm).name : "--")
            << ',' << (s.arm_prediction ? (*s.arm_prediction ? "1" : "0") : "") << ',' << s.effective_prediction
            << ',' << s.observed_outcome << ',' << s.true_label << ',' << to_string(s.overlook) << ','
            << fmt17(s.effort_charged);
        for (double a : s.per_arm_auc_after) out << ',' << fmt17(a);
        out << '\n';
    }
}

std::vector<RunRow> read_runs(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError(source + ": empty runs file");
    if (split_row(line) != run_columns()) throw ParseError(where(source, lineno) + ": unexpected runs header");
    std::vector<RunRow> rows;
    while (next_line(in, line, lineno)) {
        const auto c = split_row(line);
        if (c.size() != run_columns().size()) throw ParseError(where(source, lineno) + ": wrong field count");
        auto num = [&](std::size_t i) {
            auto v = to_double(c[i]);
            if (!v) throw ParseError(where(source, lineno) + ": bad number in column '" + run_columns()[i] + "'");
            return *v;
        };
        auto u64 = [&](std::size_t i) {
            auto v = to_u64(c[i]);
            if (!v) throw ParseError(where(source, lineno) + ": bad integer in column '" + run_columns()[i] + "'");
            return *v;
        };
        RunRow r;
        r.dataset = c[0];
        r.cell = static_cast<std::size_t>(u64(1));
        r.policy = c[2] == "ucb" ? "ucb" : "egreedy(" + c[3] + ")";
        r.strategy = c[4];
        r.effort_ratio = num(5);
        r.repetition = static_cast<int>(u64(9));
        r.seed = u64(10);
        r.final_auc = num(11);
        r.raw_auc = num(12);
        r.total_effort = num(13);
        r.found_defects = u64(14);
        r.true_positive_predictions = u64(15);
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// report

namespace {

std::string policy_label(const PolicyChoice& p) {
    if (const auto* eg = std::get_if<EpsilonGreedy>(&p)) {
        std::ostringstream os;
        os << "e-greedy " << eg->epsilon;
        return os.str();
    }
    return "UCB";
}

std::string ratio_label(double r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string cell_label(const SimConfig& c) {
    return "BA " + policy_label(c.policy) + " " + to_string(c.strategy) + " " + ratio_label(c.effort_ratio);
}

std::string pct(double v) { return fixed(100.0 * v, 1); }

void check_same_grid(const std::vector<ExperimentSummary>& summaries) {
    if (summaries.empty()) throw ValidationError("no experiment results to report");
    for (const auto& s : summaries) {
        if (s.cells.empty()) throw ValidationError("experiment grid is empty");
        if (s.cells.size() != summaries.front().cells.size())
            throw ValidationError("datasets were run on different grids");
        for (std::size_t c = 0; c < s.cells.size(); ++c) {
            const auto& a = s.cells[c].config;
            const auto& b = summaries.front().cells[c].config;
            if (a.policy != b.policy || a.strategy != b.strategy || a.effort_ratio != b.effort_ratio)
                throw ValidationError("datasets were run on different grids");
        }
    }
}

std::optional<std::size_t> find_cell(const ExperimentSummary& s, const PolicyChoice& p, Strategy st, double ratio) {
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        const auto& cfg = s.cells[c].config;
        if (cfg.policy == p && cfg.strategy == st && cfg.effort_ratio == ratio) return c;
    }
    return std::nullopt;
}

std::string correlation_cell(const std::vector<double>& xs, const std::vector<double>& ys) {
    try {
        return fixed(pearson(xs, ys), 2);
    } catch (const ValidationError&) {
        return "n/a";
    }
}

}  // namespace

std::size_t focus_cell_index(const std::vector<ExperimentSummary>& summaries, const std::optional<FocusCell>& focus) {
    check_same_grid(summaries);
    if (focus) {
        auto idx = find_cell(summaries.front(), focus->policy, focus->strategy, focus->effort_ratio);
        if (!idx)
            throw ConfigError("focus cell (" + describe(focus->policy) + ", " + to_string(focus->strategy) + ", " +
                              ratio_label(focus->effort_ratio) + ") is not part of the grid");
        return *idx;
    }
    std::vector<double> avg(summaries.front().cells.size(), 0.0);
    for (const auto& s : summaries)
        for (std::size_t c = 0; c < s.cells.size(); ++c) avg[c] += s.cells[c].mean_auc;
    const auto rk = ordinal_ranks(avg);
    return static_cast<std::size_t>(std::find(rk.begin(), rk.end(), 1) - rk.begin());
}

void write_tables(std::ostream& out, const std::vector<ExperimentSummary>& summaries, const ExperimentConfig& config) {
    check_same_grid(summaries);
    const auto& first = summaries.front();
    const double nd = static_cast<double>(summaries.size());

    out << "# Experiment report\n\n";
    out << "Master seed: " << first.master_seed << "  \nDatasets:";
    for (const auto& s : summaries)
        out << " " << s.dataset_name << " (" << s.module_count << " modules, " << s.defective_count << " defective)";
    out << "\n\n";

    // --- average AUC per cell with ranks -----------------------------------
    std::vector<PolicyChoice> policies;
    std::vector<std::pair<Strategy, double>> columns;
    for (const auto& cell : first.cells) {
        if (std::find(policies.begin(), policies.end(), cell.config.policy) == policies.end())
            policies.push_back(cell.config.policy);
        const std::pair<Strategy, double> col{cell.config.strategy, cell.config.effort_ratio};
        if (std::find(columns.begin(), columns.end(), col) == columns.end()) columns.push_back(col);
    }
    std::vector<double> avg_auc(first.cells.size(), 0.0);
    double avg_bench = 0.0;
    for (const auto& s : summaries) {
        for (std::size_t c = 0; c < s.cells.size(); ++c) avg_auc[c] += s.cells[c].mean_auc / nd;
        avg_bench += s.benchmark_auc / nd;
    }
    auto ranked = avg_auc;
    ranked.push_back(avg_bench);
    const auto ranks = ordinal_ranks(ranked);

    out << "## Average AUC of test strategies\n\n";
    out << "Rank (mean AUC over " << summaries.size() << " dataset(s)); columns are strategy / effort ratio.\n\n";
    out << "| Policy |";
    for (const auto& [st, r] : columns) out << " " << to_string(st) << " " << ratio_label(r) << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < columns.size(); ++i) out << "---|";
    out << "\n";
    for (const auto& p : policies) {
        out << "| " << policy_label(p) << " |";
        for (const auto& [st, r] : columns) {
            auto idx = find_cell(first, p, st, r);
            if (idx)
                out << " " << ranks[*idx] << " (" << fixed(avg_auc[*idx], 3) << ") |";
            else
                out << " - |";
        }
        out << "\n";
    }
    out << "\nBenchmark (mean AUC of the arms): rank " << ranks.back() << " (" << fixed(avg_bench, 3) << ")\n\n";

    // --- effort relative to SF --------------------------------------------
    out << "## Testing effort relative to SF\n\n";
    out << "Mean over datasets and policies. change = target/baseline - 1; RDIFF = 1 - target/baseline.\n\n";
    out << "| Strategy | Ratio | change (%) | RDIFF (%) | direction |\n|---|---|---|---|---|\n";
    bool any_effort_row = false;
    for (const auto& [st, r] : columns) {
        if (st == Strategy::SmallestFirst) continue;
        double change = 0.0, literal = 0.0;
        int n = 0;
        for (const auto& s : summaries)
            for (const auto& p : policies) {
                auto target = find_cell(s, p, st, r);
                auto base = find_cell(s, p, Strategy::SmallestFirst, r);
                if (!target || !base) continue;
                const auto rc = relative_change(s.cells[*target].mean_effort, s.cells[*base].mean_effort);
                change += rc.change;
                literal += rc.rdiff;
                ++n;
            }
        if (n == 0) continue;
        any_effort_row = true;
        change /= n;
        literal /= n;
        out << "| " << to_string(st) << " | " << ratio_label(r) << " | " << pct(change) << " | " << pct(literal)
            << " | " << (change > 0 ? "more effort than SF" : change < 0 ? "less effort than SF" : "equal") << " |\n";
    }
    if (!any_effort_row) out << "| - | - | - | - | grid has no SF baseline |\n";
    out << "\n";

    // --- AUC and rank of each method per dataset -----------------------------
    const std::size_t focus = focus_cell_index(summaries, config.focus);
    const auto& fcfg = first.cells[focus].config;
    std::vector<std::size_t> ba_rows;
    for (std::size_t c = 0; c < first.cells.size(); ++c)
        if (first.cells[c].config.strategy == fcfg.strategy && first.cells[c].config.effort_ratio == fcfg.effort_ratio)
            ba_rows.push_back(c);
    const std::size_t n_arms = first.arms.size();
    const std::size_t n_rows = ba_rows.size() + n_arms;
    std::vector<std::vector<double>> row_auc(n_rows, std::vector<double>(summaries.size()));
    std::vector<std::vector<std::size_t>> row_rank(n_rows, std::vector<std::size_t>(summaries.size()));
    for (std::size_t d = 0; d < summaries.size(); ++d) {
        const auto& s = summaries[d];
        if (s.arms.size() != n_arms) throw ValidationError("datasets have different arm sets");
        std::vector<double> vals;
        for (auto c : ba_rows) vals.push_back(s.cells[c].mean_auc);
        for (const auto& a : s.arms) vals.push_back(a.auc);
        const auto rk = ordinal_ranks(vals);
        for (std::size_t i = 0; i < n_rows; ++i) {
            row_auc[i][d] = vals[i];
            row_rank[i][d] = rk[i];
        }
    }
    std::vector<double> row_avg;
    for (const auto& r : row_auc) row_avg.push_back(mean(r));
    const auto avg_rank = ordinal_ranks(row_avg);

    out << "## AUC and rank of each prediction method\n\n";
    out << "BA rows use strategy " << to_string(fcfg.strategy) << " at effort ratio " << ratio_label(fcfg.effort_ratio)
        << ".\n\n| Method |";
    for (const auto& s : summaries) out << " " << s.dataset_name << " |";
    out << " Avg-AUC | Avg-rank |\n|---|";
    for (std::size_t i = 0; i < summaries.size() + 2; ++i) out << "---|";
    out << "\n";
    for (std::size_t i = 0; i < n_rows; ++i) {
        const std::string name = i < ba_rows.size() ? "BA " + policy_label(first.cells[ba_rows[i]].config.policy)
                                                    : first.arms[i - ba_rows.size()].name;
        out << "| " << name << " |";
        double rank_sum = 0.0;
        for (std::size_t d = 0; d < summaries.size(); ++d) {
            out << " " << row_rank[i][d] << " (" << fixed(row_auc[i][d], 3) << ") |";
            rank_sum += static_cast<double>(row_rank[i][d]);
        }
        out << " " << avg_rank[i] << " (" << fixed(row_avg[i], 3) << ") | " << fixed(rank_sum / nd, 1) << " |\n";
    }
    out << "\n";

    // --- effort against the baseline arm ------------------------------------
    std::size_t baseline = 0;
    if (config.baseline_arm) {
        auto it = std::find_if(first.arms.begin(), first.arms.end(),
                               [&](const StaticArmSummary& a) { return a.name == *config.baseline_arm; });
        if (it == first.arms.end()) throw ConfigError("baseline_arm '" + *config.baseline_arm + "' is not an arm");
        baseline = static_cast<std::size_t>(it - first.arms.begin());
    } else {
        std::vector<double> arm_avg(n_arms, 0.0);
        for (const auto& s : summaries)
            for (std::size_t a = 0; a < n_arms; ++a) arm_avg[a] += s.arms[a].auc;
        const auto rk = ordinal_ranks(arm_avg);
        baseline = static_cast<std::size_t>(std::find(rk.begin(), rk.end(), 1) - rk.begin());
    }
    out << "## Testing effort of " << cell_label(fcfg) << " (baseline: " << first.arms[baseline].name << ")\n\n";
    out << "| Dataset | BA effort | baseline effort | change (%) | RDIFF (%) |\n|---|---|---|---|---|\n";
    std::vector<double> changes, literals;
    for (const auto& s : summaries) {
        const double ba = s.cells[focus].mean_effort;
        const double base = s.arms[baseline].effort_by_cell.at(focus);
        const auto rc = relative_change(ba, base);
        changes.push_back(rc.change);
        literals.push_back(rc.rdiff);
        out << "| " << s.dataset_name << " | " << fixed(ba, 1) << " | " << fixed(base, 1) << " | " << pct(rc.change)
            << " | " << pct(rc.rdiff) << " |\n";
    }
    out << "| Avg. | | | " << pct(mean(changes)) << " | " << pct(mean(literals)) << " |\n";
    out << "| Median | | | " << pct(median(changes)) << " | " << pct(median(literals)) << " |\n\n";

    // --- found defects against the arm average -------------------------------
    out << "## Found defects of " << cell_label(fcfg) << " (baseline: average of the arms)\n\n";
    out << "True positives are defective modules tested under a positive prediction; "
           "found excludes defects the test overlooked.\n\n| Dataset (defects) |";
    for (const auto& a : first.arms) out << " " << a.name << " |";
    out << " Avg. arms | BA true positives | BA found | change (%) | RDIFF (%) |\n|---|";
    for (std::size_t i = 0; i < n_arms + 5; ++i) out << "---|";
    out << "\n";
    for (const auto& s : summaries) {
        out << "| " << s.dataset_name << " (" << s.defective_count << ") |";
        for (const auto& a : s.arms) out << " " << a.true_positives << " |";
        const auto& cell = s.cells[focus];
        out << " " << fixed(s.benchmark_true_positives, 1) << " | " << fixed(cell.mean_true_positives, 1) << " | "
            << fixed(cell.mean_found_defects, 1) << " |";
        if (s.benchmark_true_positives > 0.0) {
            const auto rc = relative_change(cell.mean_true_positives, s.benchmark_true_positives);
            out << " " << pct(rc.change) << " | " << pct(rc.rdiff) << " |\n";
        } else {
            out << " n/a | n/a |\n";
        }
    }
    out << "\n";

    // --- correlations ---------------------------------------------------------
    out << "## Correlation across grid cells\n\n";
    out << "| Dataset | effort vs AUC | AUC vs positive predictions |\n|---|---|---|\n";
    for (const auto& s : summaries) {
        std::vector<double> eff, aucs, pos;
        for (const auto& c : s.cells) {
            eff.push_back(c.mean_effort);
            aucs.push_back(c.mean_auc);
            pos.push_back(c.mean_positive_predictions);
        }
        out << "| " << s.dataset_name << " | " << correlation_cell(eff, aucs) << " | " << correlation_cell(aucs, pos)
            << " |\n";
    }
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string cells_csv(const std::vector<ExperimentSummary>& summaries) {
    std::ostringstream os;
    os << "dataset,cell,policy,epsilon,strategy,effort_ratio,repetitions,mean_auc,stddev_auc,min_auc,max_auc,"
          "mean_raw_auc,mean_effort,mean_found_defects,mean_true_positives,mean_positive_predictions,"
          "mean_overlooked_type1,mean_overlooked_type2,benchmark_auc,benchmark_effort,rank\n";
    for (const auto& s : summaries)
        for (std::size_t c = 0; c < s.cells.size(); ++c) {
            const auto& cell = s.cells[c];
            const auto* eg = std::get_if<EpsilonGreedy>(&cell.config.policy);
            os << s.dataset_name << ',' << c << ',' << (eg ? "egreedy" : "ucb") << ','
               << (eg ? fmt17(eg->epsilon) : "") << ',' << to_string(cell.config.strategy) << ','
               << fmt17(cell.config.effort_ratio) << ',' << cell.config.repetitions << ',' << fmt17(cell.mean_auc)
               << ',' << fmt17(cell.stddev_auc) << ',' << fmt17(cell.min_auc) << ',' << fmt17(cell.max_auc) << ','
               << fmt17(cell.mean_raw_auc) << ',' << fmt17(cell.mean_effort) << ','
               << fmt17(cell.mean_found_defects) << ',' << fmt17(cell.mean_true_positives) << ','
               << fmt17(cell.mean_positive_predictions) << ',' << fmt17(cell.mean_overlooked_type1) << ','
               << fmt17(cell.mean_overlooked_type2) << ',' << fmt17(s.benchmark_auc) << ','
               << fmt17(cell.benchmark_effort) << ',' << cell.rank << '\n';
        }
    return os.str();
}

}  // namespace

std::vector<fs::path> write_report(const std::vector<ExperimentSummary>& summaries, const ExperimentConfig& config,
                                   const fs::path& out_dir) {
    check_same_grid(summaries);

    // build everything first so a failure leaves nothing half-written
    std::ostringstream runs;
    const auto& cols = run_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) runs << (i ? "," : "") << cols[i];
    runs << '\n';
    for (const auto& s : summaries)
        for (std::size_t c = 0; c < s.cells.size(); ++c)
            for (std::size_t r = 0; r < s.cells[c].runs.size(); ++r)
                runs << run_row(s.dataset_name, c, s.cells[c].config, static_cast<int>(r),
                                derive_run_seed(s.master_seed, r), s.cells[c].runs[r])
                     << '\n';
    std::ostringstream tables;
    write_tables(tables, summaries, config);
    const std::string cells = cells_csv(summaries);
    const std::string cfg = experiment_config_json(config);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());

    std::vector<fs::path> written = {out_dir / "runs.csv", out_dir / "cells.csv", out_dir / "tables.md",
                                     out_dir / "config.json"};
    write_file(written[0], runs.str());
    write_file(written[1], cells);
    write_file(written[2], tables.str());
    write_file(written[3], cfg);
    return written;
}

std::vector<fs::path> write_report(const ExperimentSummary& summary, const ExperimentConfig& config,
                                   const fs::path& out_dir) {
    return write_report(std::vector<ExperimentSummary>{summary}, config, out_dir);
}

}  // namespace banditdp
