#pragma once

#include <cstdint>
#include <vector>

#include "gmix/dataset.hpp"

namespace gmix {

struct SyntheticSpec {
    std::vector<double> weights;
    std::vector<double> means;
    std::vector<double> variances;
    long n = 100;
    std::uint64_t seed = 1;

    // The two-component generator used throughout the reference experiments:
    // equal weights, means -1.25 and 1.25, unit variances.
    static SyntheticSpec two_component_overlap(long n, std::uint64_t seed) {
        return {{0.5, 0.5}, {-1.25, 1.25}, {1.0, 1.0}, n, seed};
    }

    void validate() const;
};

struct LabeledSample {
    Dataset data;
    std::vector<int> labels;
};

// Draws each label categorically by the weights, then the observation from
// the labeled Gaussian. Deterministic per seed.
LabeledSample sample_mixture(const SyntheticSpec& spec);

}  // namespace gmix
