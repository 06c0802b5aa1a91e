#pragma once

#include <span>
#include <vector>

#include "gmix/allocation.hpp"
#include "gmix/dataset.hpp"
#include "gmix/model.hpp"

namespace gmix {

// Relative tolerance below which a within-component variance is treated as
// exactly zero (identical points up to rounding).
inline constexpr double kDegenerateVarianceTol = 1e-12;

// Within-component variance from sufficient statistics. Clamps tiny negative
// rounding residue to zero; values below the degenerate tolerance (relative to
// the component's mean square) are reported as exactly 0.
double component_variance(const CompStats& s);

// Log marginal likelihood of one component's data under the conjugate
// normal-inverse-gamma prior, with mu and sigma^2 integrated out.
// Returns 0 for an empty component.
double log_marginal_nig(const CompStats& s, const NigPrior& prior);

// Log marginal likelihood of one component's data under the improper Jeffreys
// prior 1/sigma, up to the fixed constant dropped consistently across
// components (the exact integral carries an extra factor 1/2 per component,
// which cancels in every ratio). Requires n >= 2 and nondegenerate variance.
double log_marginal_jeffreys(const CompStats& s);

// Log prior probability of an allocation under the Dirichlet-integrated
// weights: a proper distribution over all K^N allocations.
double log_alloc_prior_dirichlet(std::span<const long> counts,
                                 std::span<const double> delta);

// Unnormalized log prior of an allocation in the min-count model: -inf if any
// component count is below min_count, else sum_i lgamma(counts[i] + delta[i]).
double log_alloc_prior_min_count(std::span<const long> counts,
                                 std::span<const double> delta, int min_count);

// Completed-data log likelihood: sum over points of the log normal density
// under the assigned component.
double log_likelihood_given_alloc(const Dataset& data,
                                  const ComponentParams& params,
                                  std::span<const int> labels);

// log of the normal density at x.
double log_normal_pdf(double x, double mu, double sigma);

}  // namespace gmix
