#pragma once

#include <string>
#include <vector>

#include "banditdp/types.hpp"

namespace banditdp {

/// Test order for the whole run, fixed before the bandit loop starts.
///
/// SF: ascending size. LF: descending size. PF: modules that at least one arm predicts
/// defective come first, then the rest; both groups descending by size.
/// Equal sizes are ordered by ascending module id.
std::vector<std::string> order_modules(const Dataset& dataset, const std::vector<Arm>& arms, Strategy strategy);

}  // namespace banditdp
