#include "gmix/marginals.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gmix/errors.hpp"

namespace gmix {

namespace {
constexpr double kLogPi = 1.1447298858494001741;  // log(pi)
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

double component_variance(const CompStats& s) {
    if (s.n <= 0) return 0.0;
    const double inv = 1.0 / static_cast<double>(s.n);
    const double mean = s.sum_x * inv;
    double v = s.sum_x2 * inv - mean * mean;
    const double scale = std::max(1.0, s.sum_x2 * inv);
    if (v < kDegenerateVarianceTol * scale) v = 0.0;
    return v;
}

double log_marginal_nig(const CompStats& s, const NigPrior& prior) {
    if (s.n == 0) return 0.0;
    const double n = static_cast<double>(s.n);
    const double a = prior.alpha;
    const double b = prior.beta;
    const double kap = prior.kappa;
    const double nk = n + kap;
    const double m = s.sum_x / nk;
    const double bracket = s.sum_x2 / nk - m * m + 2.0 * b / nk;
    return a * std::log(2.0 * b) + 0.5 * std::log(kap) +
           std::lgamma(0.5 * n + a) - 0.5 * n * kLogPi -
           (0.5 * (n + 1.0) + a) * std::log(nk) - std::lgamma(a) -
           (0.5 * n + a) * std::log(bracket);
}

double log_marginal_jeffreys(const CompStats& s) {
    if (s.n < 2)
        throw std::invalid_argument(
            "Jeffreys marginal requires at least 2 points per component");
    const double v = component_variance(s);
    if (v <= 0.0)
        throw DegenerateComponentError(
            "component has zero within-component variance");
    const double n = static_cast<double>(s.n);
    return 0.5 * (1.0 - n) * (kLogPi + std::log(v)) - 0.5 * n * std::log(n) +
           std::lgamma(0.5 * (n - 1.0));
}

double log_alloc_prior_dirichlet(std::span<const long> counts,
                                 std::span<const double> delta) {
    double delta_total = 0.0;
    long n_total = 0;
    double acc = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        delta_total += delta[i];
        n_total += counts[i];
        acc += std::lgamma(static_cast<double>(counts[i]) + delta[i]) -
               std::lgamma(delta[i]);
    }
    return acc + std::lgamma(delta_total) -
           std::lgamma(static_cast<double>(n_total) + delta_total);
}

double log_alloc_prior_min_count(std::span<const long> counts,
                                 std::span<const double> delta, int min_count) {
    double acc = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < min_count) return kNegInf;
        acc += std::lgamma(static_cast<double>(counts[i]) + delta[i]);
    }
    return acc;
}

double log_normal_pdf(double x, double mu, double sigma) {
    const double z = (x - mu) / sigma;
    return -0.5 * z * z - std::log(sigma) -
           0.5 * std::log(2.0 * std::numbers::pi);
}

double log_likelihood_given_alloc(const Dataset& data,
                                  const ComponentParams& params,
                                  std::span<const int> labels) {
    if (labels.size() != data.values.size())
        throw std::invalid_argument("allocation size does not match data");
    double acc = 0.0;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const int c = labels[j];
        acc += log_normal_pdf(data.values[j], params.mu[c], params.sigma[c]);
    }
    return acc;
}

}  // namespace gmix
