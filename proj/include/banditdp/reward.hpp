#pragma once

#include <vector>

#include "banditdp/types.hpp"

namespace banditdp {

/// Compare a binary prediction with what the test reported.
constexpr Outcome classify(bool prediction, bool observed) {
    if (prediction) return observed ? Outcome::TP : Outcome::FP;
    return observed ? Outcome::FN : Outcome::TN;
}

constexpr StreamingConfusion record(StreamingConfusion c, Outcome outcome) {
    switch (outcome) {
        case Outcome::TP: ++c.tp; break;
        case Outcome::FP: ++c.fp; break;
        case Outcome::TN: ++c.tn; break;
        case Outcome::FN: ++c.fn; break;
    }
    return c;
}

/// AUC of a hard classifier, i.e. balanced accuracy (TPR + TNR) / 2.
///
/// When only one observed class is present the rate of that class is returned on its own;
/// an empty matrix scores 0.
double auc(const StreamingConfusion& c);

/// Batch confusion matrix of predictions against labels (equal lengths required).
StreamingConfusion confusion_of(const std::vector<bool>& predictions, const std::vector<bool>& labels);

}  // namespace banditdp
