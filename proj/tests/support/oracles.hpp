#pragma once

// Independent reference computations used by the tests. Nothing here calls into the library's
// metric code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

/// Balanced accuracy by a direct pass over paired labels.
/// Returns the single defined class rate when only one class is present.
inline double balanced_accuracy(const std::vector<int>& pred, const std::vector<int>& label) {
    double pos = 0, neg = 0, hit_pos = 0, hit_neg = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (label[i] == 1) {
            pos += 1;
            if (pred[i] == 1) hit_pos += 1;
        } else {
            neg += 1;
            if (pred[i] == 0) hit_neg += 1;
        }
    }
    if (pos == 0 && neg == 0) return 0.0;
    if (pos == 0) return hit_neg / neg;
    if (neg == 0) return hit_pos / pos;
    return 0.5 * (hit_pos / pos + hit_neg / neg);
}

/// Pearson correlation via the raw-sums formula (different algebra from the two-pass version).
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

/// Arithmetic mean by plain summation.
inline double mean(const std::vector<double>& xs) {
    double s = 0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

/// UCB1 exploration bonus written out from its definition.
inline double ucb_bonus(double total_steps, double pulls) { return std::sqrt(2.0 * std::log(total_steps) / pulls); }

/// True when every ordered pair (i < j) satisfies !less(order[j], order[i]).
template <typename T, typename Less>
bool pairwise_sorted(const std::vector<T>& order, Less less) {
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (less(order[j], order[i])) return false;
    return true;
}

}  // namespace oracle
