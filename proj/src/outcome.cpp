#include "banditdp/outcome.hpp"

#include <cmath>

namespace banditdp {

double effort(double size, bool effective_prediction, double c, double ratio) {
    if (!(size > 0.0)) throw ValidationError("module size must be positive");
    if (!(c > 0.0)) throw ValidationError("effort constant must be positive");
    if (!(ratio > 0.0 && ratio <= 1.0)) throw ValidationError("effort ratio must lie in (0, 1]");
    return effective_prediction ? size * c : size * c * ratio;
}

ObservedOutcome observe_outcome(bool true_defective, bool effective_prediction, double ratio, double type2_prob,
                                Rng& rng) {
    if (!true_defective) return {false, OverlookKind::None};
    const double miss = effective_prediction ? type2_prob : type1_probability(ratio);
    if (rng.uniform() < miss)
        return {false, effective_prediction ? OverlookKind::Type2 : OverlookKind::Type1};
    return {true, OverlookKind::None};
}

}  // namespace banditdp
