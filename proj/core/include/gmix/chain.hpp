#pragma once

#include <cstdint>
#include <vector>

#include "gmix/dataset.hpp"

namespace gmix {

enum class SamplerKind { DaGibbs, CollapsedGibbs, MetropolisHastings };

struct ChainConfig {
    SamplerKind sampler = SamplerKind::CollapsedGibbs;
    long burn_in = 10'000;
    long post_burn_in = 100'000;
    long thin = 10;
    std::uint64_t seed = 1;

    // Metropolis-Hastings proposal scales and parameter restrictions.
    double mu_step = 0.5;
    double sigma_step = 0.25;
    double mu_min = -10.0;
    double mu_max = 10.0;
    double sigma_min = 0.01;

    bool keep_allocations = false;

    // Data-scale-aware defaults for the proposal scales and bounds.
    void set_proposal_defaults(const Dataset& data) {
        const double sd = data.stddev();
        mu_step = 0.5 * sd;
        sigma_step = 0.25 * sd;
        mu_min = data.min() - 2.0 * sd;
        mu_max = data.max() + 2.0 * sd;
        sigma_min = 0.01;
    }

    long saved_states() const { return post_burn_in / thin; }

    void validate() const {
        if (burn_in < 0) throw std::invalid_argument("burn_in must be >= 0");
        if (post_burn_in < 1)
            throw std::invalid_argument("post_burn_in must be >= 1");
        if (thin < 1) throw std::invalid_argument("thin must be >= 1");
        if (!(mu_step > 0.0) || !(sigma_step > 0.0))
            throw std::invalid_argument("proposal steps must be positive");
        if (!(mu_min < mu_max))
            throw std::invalid_argument("mu_min must be below mu_max");
        if (!(sigma_min > 0.0))
            throw std::invalid_argument("sigma_min must be positive");
    }
};

struct PosteriorSamples {
    int k = 0;
    long n_data = 0;

    // One row per saved state.
    std::vector<std::vector<double>> mu;
    std::vector<std::vector<double>> sigma2;
    std::vector<std::vector<double>> weights;  // p, or n/N for the min-count model
    std::vector<std::vector<long>> counts;
    std::vector<char> empty_flags;  // any count == 0 at that state

    // Saved allocation vectors, present only when requested.
    std::vector<std::vector<int>> allocations;

    long n_saved() const { return static_cast<long>(mu.size()); }

    void reserve(long states) {
        mu.reserve(states);
        sigma2.reserve(states);
        weights.reserve(states);
        counts.reserve(states);
        empty_flags.reserve(states);
    }
};

}  // namespace gmix
