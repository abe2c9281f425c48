#include "banditdp/reward.hpp"

namespace banditdp {

double auc(const StreamingConfusion& c) {
    const auto positives = c.tp + c.fn;
    const auto negatives = c.tn + c.fp;
    if (positives == 0 && negatives == 0) return 0.0;
    const double tpr = positives ? static_cast<double>(c.tp) / static_cast<double>(positives) : 0.0;
    const double tnr = negatives ? static_cast<double>(c.tn) / static_cast<double>(negatives) : 0.0;
    if (positives == 0) return tnr;
    if (negatives == 0) return tpr;
    return (tpr + tnr) / 2.0;
}

StreamingConfusion confusion_of(const std::vector<bool>& predictions, const std::vector<bool>& labels) {
    if (predictions.size() != labels.size())
        throw ValidationError("prediction and label sequences differ in length");
    StreamingConfusion c;
    for (std::size_t i = 0; i < predictions.size(); ++i) c = record(c, classify(predictions[i], labels[i]));
    return c;
}

}  // namespace banditdp
