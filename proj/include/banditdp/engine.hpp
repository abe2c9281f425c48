#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "banditdp/rng.hpp"
#include "banditdp/types.hpp"

namespace banditdp {

/// Produces the test report for a module tested under `effective_prediction`.
using OutcomeSource = std::function<ObservedOutcome(const Module& module, bool effective_prediction, Rng& rng)>;

struct RunOptions {
    bool record_steps = true;
};

/// One online pass over the dataset: order the modules, then for each module select an arm
/// (or force a positive prediction during BANP warmup), charge effort, test, and update every
/// arm's reward against the test report.
///
/// The config's own seed field is ignored; `seed` drives the run.
RunResult run_simulation(const Dataset& dataset, const std::vector<Arm>& arms, const SimConfig& config,
                         std::uint64_t seed, RunOptions options = {});

/// Same loop with test reports supplied by `source` instead of the overlooking model.
RunResult run_simulation(const Dataset& dataset, const std::vector<Arm>& arms, const SimConfig& config,
                         std::uint64_t seed, const OutcomeSource& source, RunOptions options = {});

}  // namespace banditdp
