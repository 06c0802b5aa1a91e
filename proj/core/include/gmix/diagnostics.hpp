#pragma once

#include <span>
#include <vector>

#include "gmix/chain.hpp"

namespace gmix {

struct HistogramSummary {
    std::vector<double> bin_edges;        // size bins + 1, strictly increasing
    std::vector<long> bin_counts;         // size bins
    std::vector<double> normalized_density;  // integrates to 1
};

inline constexpr int kDefaultHistogramBins = 25;

// Equal-width bins over [min, max] of the draws; rightmost bin closed.
HistogramSummary histogram(std::span<const double> draws,
                           int bins = kDefaultHistogramBins);

// Same, over explicit edges (used to put two draw sets on a common binning).
HistogramSummary histogram_with_edges(std::span<const double> draws,
                                      std::span<const double> edges);

// Integer-binned histogram of the i-th component's count draws.
HistogramSummary count_posterior_summary(const PosteriorSamples& samples,
                                         int component);

// Fraction of saved states in which some component has zero assigned points.
double empty_component_fraction(const PosteriorSamples& samples);

// Binned total-variation distance between the marginal mu draws of two
// components on a common binning; low values indicate mixing across the
// posterior's symmetric modes.
double mode_symmetry_score(const PosteriorSamples& samples, int i, int j,
                           int bins = kDefaultHistogramBins);

// Binned total-variation distance between two draw sets on a common binning.
double binned_tv_distance(std::span<const double> a, std::span<const double> b,
                          int bins = kDefaultHistogramBins);

// Locations (bin centers) of the histogram's local maxima. A mode must exceed
// every bin within `window` bins on each side and reach at least
// `min_rel_height` of the tallest bin.
std::vector<double> histogram_modes(std::span<const double> draws, int bins,
                                    double min_rel_height = 0.2,
                                    int window = 4);

// All mu draws of every component pooled into one vector.
std::vector<double> pooled_mu_draws(const PosteriorSamples& samples);

}  // namespace gmix
