#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace gmix {

// Derives an independent stream seed from a master seed and an index
// (splitmix64 finalizer). Used by the sweep runner to give each grid point
// its own stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Single-owner RNG stream. One chain owns one stream; streams are movable
// across threads but never shared.
class RngStream {
   public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return unif_(eng_); }

    double normal(double mean, double sd) {
        return mean + sd * std::normal_distribution<double>(0.0, 1.0)(eng_);
    }

    // Gamma(shape, rate) with mean shape/rate.
    double gamma(double shape, double rate) {
        return std::gamma_distribution<double>(shape, 1.0 / rate)(eng_);
    }

    // InvGamma(shape, scale): reciprocal of Gamma(shape, rate=scale).
    double inv_gamma(double shape, double scale) {
        return 1.0 / gamma(shape, scale);
    }

    std::vector<double> dirichlet(std::span<const double> alpha) {
        std::vector<double> out(alpha.size());
        double total = 0.0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            out[i] = std::gamma_distribution<double>(alpha[i], 1.0)(eng_);
            total += out[i];
        }
        for (double& v : out) v /= total;
        return out;
    }

    // Samples an index proportional to exp(logw[i]), max-shifted for
    // stability. Entries of -inf get zero probability.
    int categorical_from_log(std::span<const double> logw) {
        double mx = logw[0];
        for (double w : logw)
            if (w > mx) mx = w;
        double total = 0.0;
        for (double w : logw) total += std::exp(w - mx);
        const double u = uniform() * total;
        double cum = 0.0;
        for (std::size_t i = 0; i < logw.size(); ++i) {
            cum += std::exp(logw[i] - mx);
            if (u <= cum) return static_cast<int>(i);
        }
        return static_cast<int>(logw.size()) - 1;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

   private:
    std::mt19937_64 eng_;
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

inline double log_sum_exp(std::span<const double> logw) {
    double mx = logw[0];
    for (double w : logw)
        if (w > mx) mx = w;
    if (!std::isfinite(mx)) return mx;
    double total = 0.0;
    for (double w : logw) total += std::exp(w - mx);
    return mx + std::log(total);
}

}  // namespace gmix
