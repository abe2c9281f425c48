#include "banditdp/types.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace banditdp {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::SmallestFirst: return "sf";
        case Strategy::LargestFirst: return "lf";
        case Strategy::PositiveFirst: return "pf";
    }
    return "?";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "sf" || name == "SF") return Strategy::SmallestFirst;
    if (name == "lf" || name == "LF") return Strategy::LargestFirst;
    if (name == "pf" || name == "PF") return Strategy::PositiveFirst;
    throw ValidationError("unknown strategy '" + name + "' (expected sf, lf or pf)");
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::TP: return "TP";
        case Outcome::FP: return "FP";
        case Outcome::TN: return "TN";
        case Outcome::FN: return "FN";
    }
    return "?";
}

std::string to_string(OverlookKind k) {
    switch (k) {
        case OverlookKind::None: return "none";
        case OverlookKind::Type1: return "type1";
        case OverlookKind::Type2: return "type2";
    }
    return "?";
}

OverlookKind parse_overlook(const std::string& name) {
    if (name == "none") return OverlookKind::None;
    if (name == "type1") return OverlookKind::Type1;
    if (name == "type2") return OverlookKind::Type2;
    throw ValidationError("unknown overlook kind '" + name + "'");
}

std::string describe(const PolicyChoice& p) {
    if (const auto* eg = std::get_if<EpsilonGreedy>(&p)) {
        std::ostringstream os;
        os << "egreedy(" << eg->epsilon << ")";
        return os.str();
    }
    return "ucb";
}

void validate(const Dataset& dataset) {
    if (dataset.modules.empty()) throw ValidationError("dataset has no modules");
    std::set<std::string> seen;
    for (const auto& m : dataset.modules) {
        if (m.id.empty()) throw ValidationError("module with empty id");
        if (!(m.size > 0.0) || !std::isfinite(m.size))
            throw ValidationError("module '" + m.id + "' has non-positive size");
        if (!seen.insert(m.id).second) throw ValidationError("duplicate module id '" + m.id + "'");
    }
}

void validate_coverage(const Dataset& dataset, const std::vector<Arm>& arms) {
    for (const auto& arm : arms) {
        for (const auto& m : dataset.modules) {
            if (!arm.predictions.contains(m.id))
                throw ValidationError("arm '" + arm.name + "' has no prediction for module '" + m.id + "'");
        }
        if (arm.predictions.size() != dataset.modules.size()) {
            std::set<std::string> ids;
            for (const auto& m : dataset.modules) ids.insert(m.id);
            for (const auto& [id, _] : arm.predictions)
                if (!ids.contains(id))
                    throw ValidationError("arm '" + arm.name + "' predicts unknown module '" + id + "'");
        }
    }
}

void validate(const SimConfig& config) {
    if (const auto* eg = std::get_if<EpsilonGreedy>(&config.policy)) {
        if (!(eg->epsilon >= 0.0 && eg->epsilon <= 1.0))
            throw ValidationError("epsilon must lie in [0, 1]");
    }
    if (!(config.effort_ratio > 0.0 && config.effort_ratio <= 1.0))
        throw ValidationError("effort_ratio must lie in (0, 1]");
    if (!(config.effort_constant > 0.0) || !std::isfinite(config.effort_constant))
        throw ValidationError("effort_constant must be positive");
    if (!(config.type2_prob >= 0.0 && config.type2_prob <= 1.0))
        throw ValidationError("type2_prob must lie in [0, 1]");
    if (!(config.banp_fraction >= 0.0 && config.banp_fraction <= 1.0))
        throw ValidationError("banp_fraction must lie in [0, 1]");
    if (config.repetitions < 1) throw ValidationError("repetitions must be at least 1");
}

}  // namespace banditdp
