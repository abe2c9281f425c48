#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "banditdp/types.hpp"

namespace banditdp {

/// Detection quality of one generated arm. Rates are interpolated linearly in the module's
/// size quantile, from the smallest module (`*_small`) to the largest (`*_large`).
struct ArmQuality {
    std::string name;
    double tpr_small = 0.5;
    double tnr_small = 0.5;
    double tpr_large = 0.5;
    double tnr_large = 0.5;
};

struct SyntheticSpec {
    std::size_t modules = 300;
    double log_size_mean = 5.5;  // sizes are lognormal
    double log_size_sd = 1.0;
    double defect_rate_small = 0.1;  // defect probability at the smallest size quantile
    double defect_rate_large = 0.5;  // and at the largest
    std::vector<ArmQuality> arms;
};

/// Four arms that agree in quality on small modules and differ on large ones.
std::vector<ArmQuality> default_arm_qualities();

struct SyntheticData {
    Dataset dataset;
    std::vector<Arm> arms;
};

/// Deterministic for a given (spec, seed). Module ids are m0000, m0001, ...
SyntheticData make_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

}  // namespace banditdp
