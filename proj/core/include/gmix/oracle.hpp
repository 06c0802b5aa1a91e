#pragma once

#include <span>
#include <vector>

#include "gmix/dataset.hpp"
#include "gmix/model.hpp"

namespace gmix {

// Exact posterior over allocations, obtained by brute-force enumeration.
struct EnumeratedPosterior {
    std::vector<std::vector<int>> allocations;
    std::vector<double> log_weights;  // unnormalized
    std::vector<double> normalized;
};

inline constexpr long kEnumerationGuard = 10'000'000;

// Enumerates every allocation (base-K counter order), computes the
// unnormalized log posterior (allocation prior plus component marginals) and
// normalizes by log-sum-exp. For the min-count model only feasible
// allocations are kept.
EnumeratedPosterior oracle_enumerate(const Dataset& data,
                                     const ModelSpec& spec);

// Numerically integrates the defining double integral of one component's
// marginal likelihood (over mean and variance/scale) by adaptive quadrature
// on a transformed domain. Returns the log of the integral, in the same
// proportionality convention as the closed forms.
double quadrature_log_marginal_nig(std::span<const double> xs,
                                   const NigPrior& prior);
double quadrature_log_marginal_jeffreys(std::span<const double> xs);

struct Lemma1SweepConfig {
    double c1 = 1.0;                 // alpha = c1 * kappa
    double c2 = 1.0;                 // beta = c2 * kappa
    std::vector<double> kappa_grid;  // strictly decreasing
    std::vector<int> g_prime;        // all points in one component
    std::vector<int> g_double_prime;
    int k = 2;
    std::vector<double> delta;  // defaults to all ones
};

struct Lemma1Row {
    double kappa;
    double log_ratio;  // log f(G'|x) - log f(G''|x)
};

// Posterior log ratio of the two allocations along a decreasing kappa grid,
// with alpha and beta tied to kappa. Entirely in log space.
std::vector<Lemma1Row> lemma1_ratio_sweep(const Dataset& data,
                                          const Lemma1SweepConfig& cfg);

}  // namespace gmix
