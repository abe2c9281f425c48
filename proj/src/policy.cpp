#include "banditdp/policy.hpp"

#include <cmath>
#include <limits>

#include "banditdp/reward.hpp"

namespace banditdp {

void PolicyState::update(std::optional<std::size_t> selected, const std::vector<Outcome>& per_arm_outcomes) {
    if (per_arm_outcomes.size() != arms_.size())
        throw ValidationError("outcome count does not match arm count");
    if (selected && *selected >= arms_.size()) throw ValidationError("selected arm out of range");
    for (std::size_t i = 0; i < arms_.size(); ++i) {
        arms_[i].confusion = record(arms_[i].confusion, per_arm_outcomes[i]);
        arms_[i].auc = auc(arms_[i].confusion);
    }
    if (selected) ++arms_[*selected].times_selected;
    ++total_steps_;
}

std::vector<double> PolicyState::aucs() const {
    std::vector<double> out;
    out.reserve(arms_.size());
    for (const auto& a : arms_) out.push_back(a.auc);
    return out;
}

namespace {

// Uniformly random index among those whose score equals the maximum.
std::size_t argmax_random_tie(const std::vector<double>& scores, Rng& rng) {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] > best) {
            best = scores[i];
            ties.assign(1, i);
        } else if (scores[i] == best) {
            ties.push_back(i);
        }
    }
    if (ties.size() == 1) return ties.front();
    return ties[rng.below(ties.size())];
}

}  // namespace

double ucb_index(const ArmStats& arm, std::uint64_t total_steps) {
    if (arm.times_selected == 0) return std::numeric_limits<double>::infinity();
    const double t = static_cast<double>(std::max<std::uint64_t>(total_steps, 1));
    return arm.auc + std::sqrt(2.0 * std::log(t) / static_cast<double>(arm.times_selected));
}

std::size_t select_arm(const PolicyState& state, const PolicyChoice& policy, Rng& rng) {
    if (state.arm_count() == 0) throw ValidationError("no arms");

    if (const auto* eg = std::get_if<EpsilonGreedy>(&policy)) {
        if (rng.uniform() < eg->epsilon) return rng.below(state.arm_count());
        return argmax_random_tie(state.aucs(), rng);
    }

    std::vector<double> scores;
    scores.reserve(state.arm_count());
    for (const auto& a : state.arms()) scores.push_back(ucb_index(a, state.total_steps()));
    return argmax_random_tie(scores, rng);
}

std::size_t banp_warmup_length(std::size_t total_modules, double banp_fraction) {
    const double raw = banp_fraction * static_cast<double>(total_modules);
    // e.g. 0.28 * 25 evaluates to 7.000000000000001; snap values within rounding noise of an integer
    const double nearest = std::round(raw);
    const double k = std::abs(raw - nearest) < 1e-9 * std::max(1.0, raw) ? nearest : std::ceil(raw);
    return std::min(total_modules, static_cast<std::size_t>(k));
}

EffectivePrediction banp_effective_prediction(std::size_t step_index, std::size_t total_modules,
                                              double banp_fraction, bool arm_prediction) {
    if (step_index < banp_warmup_length(total_modules, banp_fraction)) return {true, true};
    return {arm_prediction, false};
}

}  // namespace banditdp
