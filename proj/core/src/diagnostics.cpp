#include "gmix/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmix {

namespace {

std::vector<double> equal_width_edges(double lo, double hi, int bins) {
    if (!(hi > lo)) {
        // Degenerate range: one unit-width window around the single value.
        lo -= 0.5;
        hi += 0.5;
    }
    std::vector<double> edges(bins + 1);
    for (int b = 0; b <= bins; ++b)
        edges[b] = lo + (hi - lo) * static_cast<double>(b) / bins;
    edges[bins] = hi;
    return edges;
}

long find_bin(double x, std::span<const double> edges) {
    const long bins = static_cast<long>(edges.size()) - 1;
    if (x < edges.front() || x > edges.back()) return -1;
    auto it = std::upper_bound(edges.begin(), edges.end(), x);
    long b = static_cast<long>(it - edges.begin()) - 1;
    if (b == bins) b = bins - 1;  // rightmost bin closed
    return b;
}

}  // namespace

HistogramSummary histogram_with_edges(std::span<const double> draws,
                                      std::span<const double> edges) {
    HistogramSummary h;
    h.bin_edges.assign(edges.begin(), edges.end());
    const long bins = static_cast<long>(edges.size()) - 1;
    h.bin_counts.assign(bins, 0);
    long inside = 0;
    for (double x : draws) {
        const long b = find_bin(x, edges);
        if (b >= 0) {
            ++h.bin_counts[b];
            ++inside;
        }
    }
    h.normalized_density.resize(bins);
    for (long b = 0; b < bins; ++b) {
        const double width = edges[b + 1] - edges[b];
        h.normalized_density[b] =
            inside == 0 ? 0.0
                        : static_cast<double>(h.bin_counts[b]) /
                              (static_cast<double>(inside) * width);
    }
    return h;
}

HistogramSummary histogram(std::span<const double> draws, int bins) {
    if (draws.empty()) throw std::invalid_argument("histogram of empty draws");
    if (bins < 1) throw std::invalid_argument("bins must be >= 1");
    const auto [lo, hi] = std::minmax_element(draws.begin(), draws.end());
    return histogram_with_edges(draws, equal_width_edges(*lo, *hi, bins));
}

HistogramSummary count_posterior_summary(const PosteriorSamples& samples,
                                         int component) {
    if (component < 0 || component >= samples.k)
        throw std::invalid_argument("component index out of range");
    long lo = samples.counts.front()[component];
    long hi = lo;
    for (const auto& row : samples.counts) {
        lo = std::min(lo, row[component]);
        hi = std::max(hi, row[component]);
    }
    std::vector<double> edges;
    for (long c = lo; c <= hi + 1; ++c)
        edges.push_back(static_cast<double>(c) - 0.5);
    std::vector<double> draws;
    draws.reserve(samples.counts.size());
    for (const auto& row : samples.counts)
        draws.push_back(static_cast<double>(row[component]));
    return histogram_with_edges(draws, edges);
}

double empty_component_fraction(const PosteriorSamples& samples) {
    if (samples.empty_flags.empty())
        throw std::invalid_argument("no saved states");
    long empties = 0;
    for (char f : samples.empty_flags) empties += f ? 1 : 0;
    return static_cast<double>(empties) /
           static_cast<double>(samples.empty_flags.size());
}

double binned_tv_distance(std::span<const double> a, std::span<const double> b,
                          int bins) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("empty draw vector");
    const auto [alo, ahi] = std::minmax_element(a.begin(), a.end());
    const auto [blo, bhi] = std::minmax_element(b.begin(), b.end());
    const auto edges = equal_width_edges(std::min(*alo, *blo),
                                         std::max(*ahi, *bhi), bins);
    const HistogramSummary ha = histogram_with_edges(a, edges);
    const HistogramSummary hb = histogram_with_edges(b, edges);
    double tv = 0.0;
    for (int i = 0; i < bins; ++i) {
        const double pa = static_cast<double>(ha.bin_counts[i]) /
                          static_cast<double>(a.size());
        const double pb = static_cast<double>(hb.bin_counts[i]) /
                          static_cast<double>(b.size());
        tv += std::abs(pa - pb);
    }
    return 0.5 * tv;
}

double mode_symmetry_score(const PosteriorSamples& samples, int i, int j,
                           int bins) {
    if (i < 0 || i >= samples.k || j < 0 || j >= samples.k)
        throw std::invalid_argument("component index out of range");
    std::vector<double> a, b;
    a.reserve(samples.mu.size());
    b.reserve(samples.mu.size());
    for (const auto& row : samples.mu) {
        a.push_back(row[i]);
        b.push_back(row[j]);
    }
    return binned_tv_distance(a, b, bins);
}

std::vector<double> histogram_modes(std::span<const double> draws, int bins,
                                    double min_rel_height, int window) {
    const HistogramSummary h = histogram(draws, bins);
    const long n_bins = static_cast<long>(h.bin_counts.size());
    const long tallest =
        *std::max_element(h.bin_counts.begin(), h.bin_counts.end());
    std::vector<double> modes;
    for (long b = 0; b < n_bins; ++b) {
        const long c = h.bin_counts[b];
        if (c < static_cast<long>(min_rel_height * tallest)) continue;
        bool is_peak = true;
        for (long o = std::max<long>(0, b - window);
             o <= std::min(n_bins - 1, b + window); ++o) {
            if (o == b) continue;
            if (h.bin_counts[o] > c ||
                (h.bin_counts[o] == c && o < b)) {  // ties go to the left bin
                is_peak = false;
                break;
            }
        }
        if (is_peak)
            modes.push_back(0.5 * (h.bin_edges[b] + h.bin_edges[b + 1]));
    }
    return modes;
}

std::vector<double> pooled_mu_draws(const PosteriorSamples& samples) {
    std::vector<double> pooled;
    pooled.reserve(samples.mu.size() * samples.k);
    for (const auto& row : samples.mu)
        pooled.insert(pooled.end(), row.begin(), row.end());
    return pooled;
}

}  // namespace gmix
