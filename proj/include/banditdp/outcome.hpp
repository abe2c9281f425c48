#pragma once

#include "banditdp/rng.hpp"
#include "banditdp/types.hpp"

namespace banditdp {

/// Testing effort of one module: size * c for a positive prediction, size * c * ratio otherwise.
double effort(double size, bool effective_prediction, double c, double ratio);

/// Probability that testing misses a defect in a module predicted negative.
/// Effort is taken to be proportional to detection, so this is 1 - ratio.
inline double type1_probability(double ratio) { return 1.0 - ratio; }

/// What the test reports for one module.
///
/// Clean modules always test clean. A defective module is missed with probability
/// 1 - ratio when tested under a negative prediction (Type 1), or with probability
/// type2_prob under a positive one (Type 2). One uniform draw is consumed per defective module.
ObservedOutcome observe_outcome(bool true_defective, bool effective_prediction, double ratio, double type2_prob,
                                Rng& rng);

}  // namespace banditdp
