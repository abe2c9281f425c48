#include "banditdp/strategy.hpp"

#include <algorithm>

namespace banditdp {

std::vector<std::string> order_modules(const Dataset& dataset, const std::vector<Arm>& arms, Strategy strategy) {
    if (dataset.modules.empty()) throw ValidationError("dataset has no modules");
    validate_coverage(dataset, arms);

    std::vector<const Module*> mods;
    mods.reserve(dataset.size());
    for (const auto& m : dataset.modules) mods.push_back(&m);

    auto ascending = [](const Module* a, const Module* b) {
        if (a->size != b->size) return a->size < b->size;
        return a->id < b->id;
    };
    auto descending = [](const Module* a, const Module* b) {
        if (a->size != b->size) return a->size > b->size;
        return a->id < b->id;
    };

    switch (strategy) {
        case Strategy::SmallestFirst:
            std::sort(mods.begin(), mods.end(), ascending);
            break;
        case Strategy::LargestFirst:
            std::sort(mods.begin(), mods.end(), descending);
            break;
        case Strategy::PositiveFirst: {
            auto flagged = [&arms](const Module* m) {
                return std::any_of(arms.begin(), arms.end(),
                                   [m](const Arm& a) { return a.predictions.at(m->id); });
            };
            auto mid = std::stable_partition(mods.begin(), mods.end(), flagged);
            std::sort(mods.begin(), mid, descending);
            std::sort(mid, mods.end(), descending);
            break;
        }
    }

    std::vector<std::string> ids;
    ids.reserve(mods.size());
    for (const auto* m : mods) ids.push_back(m->id);
    return ids;
}

}  // namespace banditdp
