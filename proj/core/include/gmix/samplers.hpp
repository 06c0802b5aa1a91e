#pragma once

#include "gmix/chain.hpp"
#include "gmix/dataset.hpp"
#include "gmix/model.hpp"

namespace gmix {

// Data-augmentation Gibbs for the standard model (NIG or RG prior):
// alternates allocations, weights, component parameters and (for RG) the
// shared rate hyperparameter.
PosteriorSamples run_da_gibbs(const Dataset& data, const ModelSpec& spec,
                              const ChainConfig& cfg);

// Collapsed Gibbs over allocations with component parameters integrated out
// (NIG prior with the Dirichlet allocation prior, or Jeffreys prior with the
// min-count allocation prior). Component parameters are drawn retrospectively
// for each saved state.
PosteriorSamples run_collapsed_gibbs(const Dataset& data, const ModelSpec& spec,
                                     const ChainConfig& cfg);

// Random-walk Metropolis-Hastings on (mu, sigma) with an
// allocation proposal proportional to the completed-data likelihood, for the
// min-count Jeffreys model. mu proposals wrap into [mu_min, mu_max]; sigma
// proposals reflect at sigma_min.
PosteriorSamples run_metropolis_hastings(const Dataset& data,
                                         const ModelSpec& spec,
                                         const ChainConfig& cfg);

// Dispatches on cfg.sampler and checks the sampler/prior pairing.
PosteriorSamples run_chain(const Dataset& data, const ModelSpec& spec,
                           const ChainConfig& cfg);

// Wraps v into [lo, hi) by translation (used by the MH mu proposal).
double wrap_into(double v, double lo, double hi);

// Reflects v at the lower bound lo (used by the MH sigma proposal).
double reflect_at(double v, double lo);

}  // namespace gmix
