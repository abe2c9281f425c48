#include "banditdp/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "banditdp/rng.hpp"

namespace banditdp {

std::vector<ArmQuality> default_arm_qualities() {
    return {
        {"strong", 0.55, 0.70, 0.85, 0.80},
        {"balanced", 0.55, 0.70, 0.65, 0.70},
        {"cautious", 0.55, 0.70, 0.45, 0.85},
        {"weak", 0.55, 0.70, 0.35, 0.65},
    };
}

namespace {

double normal(Rng& rng) {
    // Box-Muller; one draw per call keeps the stream layout simple
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double lerp(double a, double b, double t) { return a + (b - a) * t; }

}  // namespace

SyntheticData make_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
    if (spec.modules == 0) throw ValidationError("synthetic dataset needs at least one module");
    if (spec.arms.empty()) throw ValidationError("synthetic dataset needs at least one arm");

    Rng rng(seed);
    const std::size_t n = spec.modules;
    std::vector<double> sizes(n);
    for (auto& s : sizes) s = std::max(1.0, std::round(std::exp(spec.log_size_mean + spec.log_size_sd * normal(rng))));

    // size quantile of every module
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
    std::vector<double> quantile(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) quantile[order[r]] = n > 1 ? static_cast<double>(r) / static_cast<double>(n - 1) : 0.0;

    SyntheticData out;
    char id[32];
    for (std::size_t i = 0; i < n; ++i) {
        std::snprintf(id, sizeof id, "m%04zu", i);
        const bool defective = rng.bernoulli(lerp(spec.defect_rate_small, spec.defect_rate_large, quantile[i]));
        out.dataset.modules.push_back(Module{id, sizes[i], defective});
    }
    for (const auto& q : spec.arms) {
        Arm arm{q.name, {}};
        for (std::size_t i = 0; i < n; ++i) {
            const auto& m = out.dataset.modules[i];
            const double t = quantile[i];
            const bool pred = m.defective ? rng.bernoulli(lerp(q.tpr_small, q.tpr_large, t))
                                          : !rng.bernoulli(lerp(q.tnr_small, q.tnr_large, t));
            arm.predictions.emplace(m.id, pred);
        }
        out.arms.push_back(std::move(arm));
    }
    return out;
}

}  // namespace banditdp
