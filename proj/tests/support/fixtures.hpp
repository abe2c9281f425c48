#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "banditdp/engine.hpp"
#include "banditdp/types.hpp"

namespace fixtures {

using namespace banditdp;

/// Two arms over four defective modules t11, t19, t15, t13 (tested in that order under LF).
/// Arm A predicts P, P, N, P; arm B predicts N, N, N, P.
struct TwoArmScenario {
    Dataset dataset;
    std::vector<Arm> arms;
    SimConfig config;
    std::vector<bool> scripted_observations{true, true, false, false};
};

inline TwoArmScenario two_arm_scenario() {
    TwoArmScenario s;
    const std::vector<std::string> ids{"t11", "t19", "t15", "t13"};
    const std::vector<double> sizes{400, 300, 200, 100};
    const std::vector<bool> a{true, true, false, true};
    const std::vector<bool> b{false, false, false, true};
    Arm arm_a{"A", {}}, arm_b{"B", {}};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        s.dataset.modules.push_back({ids[i], sizes[i], true});
        arm_a.predictions[ids[i]] = a[i];
        arm_b.predictions[ids[i]] = b[i];
    }
    s.arms = {arm_a, arm_b};
    s.config.policy = EpsilonGreedy{0.0};
    s.config.strategy = Strategy::LargestFirst;
    s.config.effort_ratio = 0.1;
    s.config.effort_constant = 0.01;
    s.config.type2_prob = 0.2;
    s.config.banp_fraction = 0.5;  // warmup covers the first two modules
    return s;
}

/// Replays a fixed list of test reports, one per step.
inline OutcomeSource scripted(std::vector<bool> observations) {
    auto obs = std::make_shared<std::vector<bool>>(std::move(observations));
    auto next = std::make_shared<std::size_t>(0);
    return [obs, next](const Module& m, bool pred, Rng&) {
        const bool seen = obs->at((*next)++);
        ObservedOutcome o{seen, OverlookKind::None};
        if (m.defective && !seen) o.overlook = pred ? OverlookKind::Type2 : OverlookKind::Type1;
        return o;
    };
}

/// n modules, round(n * defect_fraction) of them defective at random positions, random sizes.
/// Arm "truth" predicts the labels, arm "never" predicts all negative.
struct TruthVsConstant {
    Dataset dataset;
    std::vector<Arm> arms;
};

inline TruthVsConstant truth_vs_constant(std::size_t n, double defect_fraction, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<bool> labels(n, false);
    const auto k = static_cast<std::size_t>(std::llround(defect_fraction * static_cast<double>(n)));
    std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::shuffle(labels.begin(), labels.end(), gen);
    TruthVsConstant out;
    Arm truth{"truth", {}}, never{"never", {}};
    for (std::size_t i = 0; i < n; ++i) {
        const std::string id = "m" + std::to_string(i);
        out.dataset.modules.push_back({id, static_cast<double>(10 + gen() % 2000), labels[i]});
        truth.predictions[id] = labels[i];
        never.predictions[id] = false;
    }
    out.arms = {truth, never};
    return out;
}

}  // namespace fixtures
