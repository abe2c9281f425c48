#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "banditdp/rng.hpp"
#include "banditdp/types.hpp"

namespace banditdp {

struct ArmStats {
    StreamingConfusion confusion;
    double auc = 0.0;  // cached reward::auc(confusion)
    std::uint64_t times_selected = 0;
};

/// Running bandit state for one simulation.
class PolicyState {
public:
    explicit PolicyState(std::size_t arm_count) : arms_(arm_count) {}

    std::size_t arm_count() const { return arms_.size(); }
    const ArmStats& arm(std::size_t i) const { return arms_.at(i); }
    const std::vector<ArmStats>& arms() const { return arms_; }
    std::uint64_t total_steps() const { return total_steps_; }

    /// Record one tested module. `selected` is empty for a BANP warmup step.
    /// Every arm is updated with its own outcome, not only the selected one.
    void update(std::optional<std::size_t> selected, const std::vector<Outcome>& per_arm_outcomes);

    std::vector<double> aucs() const;

    /// Test hook: overwrite cached values to set up a selection scenario directly.
    void set_arm(std::size_t i, ArmStats stats) { arms_.at(i) = stats; }
    void set_total_steps(std::uint64_t n) { total_steps_ = n; }

private:
    std::vector<ArmStats> arms_;
    std::uint64_t total_steps_ = 0;
};

/// Index of the arm to follow for the next module.
///
/// epsilon-greedy explores uniformly with probability epsilon, otherwise exploits the highest
/// cached AUC. UCB plays never-selected arms first, then maximises
/// auc + sqrt(2 ln(max(total_steps, 1)) / times_selected). All ties are broken uniformly at random.
std::size_t select_arm(const PolicyState& state, const PolicyChoice& policy, Rng& rng);

/// UCB1 index of one arm; infinite for an arm that was never selected.
double ucb_index(const ArmStats& arm, std::uint64_t total_steps);

/// Number of leading modules forced positive: ceil(fraction * total_modules).
std::size_t banp_warmup_length(std::size_t total_modules, double banp_fraction);

struct EffectivePrediction {
    bool prediction = false;
    bool in_warmup = false;
    bool operator==(const EffectivePrediction&) const = default;
};

EffectivePrediction banp_effective_prediction(std::size_t step_index, std::size_t total_modules,
                                              double banp_fraction, bool arm_prediction);

}  // namespace banditdp
