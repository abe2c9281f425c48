#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace banditdp {

/// Raised for inputs that violate a domain invariant (bad sizes, missing ids, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One testable unit of the system under test.
struct Module {
    std::string id;
    double size = 1.0;  // LOC or any positive size proxy
    bool defective = false;

    bool operator==(const Module&) const = default;
};

struct Dataset {
    std::vector<Module> modules;

    std::size_t size() const { return modules.size(); }
    bool operator==(const Dataset&) const = default;
};

/// A candidate prediction model reduced to one binary label per module.
struct Arm {
    std::string name;
    std::map<std::string, bool> predictions;  // true = predicted defective

    bool operator==(const Arm&) const = default;
};

struct EpsilonGreedy {
    double epsilon = 0.0;
    bool operator==(const EpsilonGreedy&) const = default;
};

struct Ucb {
    bool operator==(const Ucb&) const = default;
};

using PolicyChoice = std::variant<EpsilonGreedy, Ucb>;

enum class Strategy { SmallestFirst, LargestFirst, PositiveFirst };

struct SimConfig {
    PolicyChoice policy = EpsilonGreedy{0.0};
    Strategy strategy = Strategy::PositiveFirst;
    double effort_ratio = 0.1;
    double effort_constant = 1.0;
    double type2_prob = 0.2;
    double banp_fraction = 0.1;
    std::uint64_t seed = 0;
    int repetitions = 20;

    bool operator==(const SimConfig&) const = default;
};

enum class Outcome { TP, FP, TN, FN };

struct StreamingConfusion {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t tn = 0;
    std::uint64_t fn = 0;

    std::uint64_t total() const { return tp + fp + tn + fn; }
    bool operator==(const StreamingConfusion&) const = default;
};

enum class OverlookKind { None, Type1, Type2 };

struct ObservedOutcome {
    bool observed_defective = false;
    OverlookKind overlook = OverlookKind::None;

    bool operator==(const ObservedOutcome&) const = default;
};

struct StepRecord {
    std::size_t step_index = 0;
    std::string module_id;
    std::optional<std::size_t> selected_arm;  // empty during BANP warmup
    std::optional<bool> arm_prediction;       // raw prediction of the selected arm
    bool effective_prediction = false;
    bool observed_outcome = false;
    bool true_label = false;
    OverlookKind overlook = OverlookKind::None;
    double effort_charged = 0.0;
    std::vector<double> per_arm_auc_after;

    bool operator==(const StepRecord&) const = default;
};

struct RunResult {
    std::vector<StepRecord> steps;
    double final_auc_vs_truth = 0.0;
    // Same metric restricted to steps where an arm was selected, using its raw prediction.
    double raw_auc_vs_truth = 0.0;
    double total_effort = 0.0;
    std::uint64_t found_defects = 0;
    std::uint64_t true_positive_predictions = 0;
    std::uint64_t positive_predictions = 0;
    std::uint64_t defects_overlooked_type1 = 0;
    std::uint64_t defects_overlooked_type2 = 0;
    std::uint64_t warmup_steps = 0;
    std::vector<double> per_arm_final_auc;

    bool operator==(const RunResult&) const = default;
};

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& name);
std::string to_string(Outcome o);
std::string to_string(OverlookKind k);
OverlookKind parse_overlook(const std::string& name);

/// "egreedy(0.1)" or "ucb"
std::string describe(const PolicyChoice& p);

/// Throws ValidationError unless ids are unique, sizes positive and the dataset non-empty.
void validate(const Dataset& dataset);

/// Throws ValidationError unless every module id of the dataset has a prediction in every arm
/// and no arm predicts an id outside the dataset.
void validate_coverage(const Dataset& dataset, const std::vector<Arm>& arms);

void validate(const SimConfig& config);

}  // namespace banditdp
