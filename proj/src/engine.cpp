#include "banditdp/engine.hpp"

#include <unordered_map>

#include "banditdp/outcome.hpp"
#include "banditdp/policy.hpp"
#include "banditdp/reward.hpp"
#include "banditdp/strategy.hpp"

namespace banditdp {

RunResult run_simulation(const Dataset& dataset, const std::vector<Arm>& arms, const SimConfig& config,
                         std::uint64_t seed, RunOptions options) {
    const double ratio = config.effort_ratio;
    const double type2 = config.type2_prob;
    OutcomeSource model = [ratio, type2](const Module& m, bool pred, Rng& rng) {
        return observe_outcome(m.defective, pred, ratio, type2, rng);
    };
    return run_simulation(dataset, arms, config, seed, model, options);
}

RunResult run_simulation(const Dataset& dataset, const std::vector<Arm>& arms, const SimConfig& config,
                         std::uint64_t seed, const OutcomeSource& source, RunOptions options) {
    if (arms.empty()) throw ValidationError("no arms");
    validate(dataset);
    validate(config);

    const auto order = order_modules(dataset, arms, config.strategy);
    const std::size_t n = order.size();
    const std::size_t k = arms.size();

    std::unordered_map<std::string, const Module*> by_id;
    by_id.reserve(n);
    for (const auto& m : dataset.modules) by_id.emplace(m.id, &m);

    // predictions[i][a]: arm a's prediction for the i-th module in test order
    std::vector<std::vector<char>> predictions(n, std::vector<char>(k));
    std::vector<const Module*> tested(n);
    for (std::size_t i = 0; i < n; ++i) {
        tested[i] = by_id.at(order[i]);
        for (std::size_t a = 0; a < k; ++a) predictions[i][a] = arms[a].predictions.at(order[i]);
    }

    Rng rng(seed);
    PolicyState state(k);
    RunResult result;
    if (options.record_steps) result.steps.reserve(n);

    std::vector<bool> effective(n), truth(n);
    std::vector<bool> raw_pred, raw_truth;
    std::vector<Outcome> outcomes(k);

    for (std::size_t i = 0; i < n; ++i) {
        const Module& m = *tested[i];
        std::optional<std::size_t> selected;
        std::optional<bool> arm_pred;

        const bool warmup = banp_effective_prediction(i, n, config.banp_fraction, false).in_warmup;
        bool pred = true;
        if (!warmup) {
            selected = select_arm(state, config.policy, rng);
            arm_pred = predictions[i][*selected] != 0;
            pred = *arm_pred;
        }

        const double cost = effort(m.size, pred, config.effort_constant, config.effort_ratio);
        const ObservedOutcome observed = source(m, pred, rng);
        if (observed.observed_defective && !m.defective)
            throw ValidationError("outcome source reported a defect in clean module '" + m.id + "'");

        for (std::size_t a = 0; a < k; ++a) outcomes[a] = classify(predictions[i][a] != 0, observed.observed_defective);
        state.update(selected, outcomes);

        effective[i] = pred;
        truth[i] = m.defective;
        if (arm_pred) {
            raw_pred.push_back(*arm_pred);
            raw_truth.push_back(m.defective);
        }

        result.total_effort += cost;
        if (warmup) ++result.warmup_steps;
        if (pred) ++result.positive_predictions;
        if (pred && m.defective) ++result.true_positive_predictions;
        if (pred && m.defective && observed.observed_defective) ++result.found_defects;
        if (observed.overlook == OverlookKind::Type1) ++result.defects_overlooked_type1;
        if (observed.overlook == OverlookKind::Type2) ++result.defects_overlooked_type2;

        if (options.record_steps) {
            StepRecord rec;
            rec.step_index = i;
            rec.module_id = m.id;
            rec.selected_arm = selected;
            rec.arm_prediction = arm_pred;
            rec.effective_prediction = pred;
            rec.observed_outcome = observed.observed_defective;
            rec.true_label = m.defective;
            rec.overlook = observed.overlook;
            rec.effort_charged = cost;
            rec.per_arm_auc_after = state.aucs();
            result.steps.push_back(std::move(rec));
        }
    }

    result.final_auc_vs_truth = auc(confusion_of(effective, truth));
    result.raw_auc_vs_truth = auc(confusion_of(raw_pred, raw_truth));
    result.per_arm_final_auc = state.aucs();
    return result;
}

}  // namespace banditdp
