#include "gmix/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gmix/allocation.hpp"
#include "gmix/errors.hpp"
#include "gmix/marginals.hpp"
#include "gmix/quadrature.hpp"
#include "gmix/random.hpp"

namespace gmix {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLog2Pi = 1.8378770664093454836;

struct SampleMoments {
    double n, sum, sum2, mean, var;
};

SampleMoments moments(std::span<const double> xs) {
    SampleMoments m{static_cast<double>(xs.size()), 0.0, 0.0, 0.0, 0.0};
    for (double x : xs) {
        m.sum += x;
        m.sum2 += x * x;
    }
    m.mean = m.sum / m.n;
    m.var = m.sum2 / m.n - m.mean * m.mean;
    return m;
}

// log ∫ exp(log_f(u)) du over [a, b], max-shifted at the window center.
// The outer integral of a nested pair runs at a looser tolerance: its
// integrand carries the inner integral's quadrature noise, which caps the
// accuracy any refinement can reach.
double log_integral(const std::function<double(double)>& log_f, double a,
                    double b, double rel_tol = 1e-10) {
    const double shift = log_f(0.5 * (a + b));
    const double val = integrate_adaptive(
        [&](double u) { return std::exp(log_f(u) - shift); }, a, b, rel_tol);
    if (!(val > 0.0)) return kNegInf;
    return shift + std::log(val);
}

}  // namespace

double quadrature_log_marginal_nig(std::span<const double> xs,
                                   const NigPrior& prior) {
    if (xs.empty() || xs.size() > 8)
        throw std::invalid_argument(
            "quadrature check supports 1 to 8 points per component");
    const SampleMoments m = moments(xs);
    const double a = prior.alpha, b = prior.beta, kap = prior.kappa;
    const double kn = m.n + kap;
    const double an = a + 0.5 * m.n;
    const double bn = b + 0.5 * (m.sum2 - m.sum * m.sum / kn);
    const double t0 = std::log(bn / (an + 1.0));  // mode of log sigma^2
    const double t_sd = std::sqrt(1.0 / an + 1.0 / (an * an));

    // log of prior * likelihood * |d sigma^2 / dt| at t = log sigma^2 and
    // u = mu - mu_center. The quadratic in mu is expanded around its
    // minimizer, (n + kappa) u^2 + R: evaluating it in the raw mu variable
    // cancels catastrophically once sigma^2 is small, and the amplified
    // rounding noise makes the integrand impossible to refine.
    const double r0 = m.sum2 - m.sum * m.sum / kn;
    auto log_joint = [&](double t, double u) {
        const double s2 = std::exp(t);
        double acc = a * std::log(b) - std::lgamma(a) - a * t -
                     b / s2;  // inverse-gamma part and Jacobian
        acc += -0.5 * (kLog2Pi + t - std::log(kap));
        acc += -0.5 * m.n * (kLog2Pi + t);
        acc += -0.5 * (kn * u * u + r0) / s2;
        return acc;
    };

    auto evaluate = [&](double width) {
        auto inner = [&](double t) {
            // u integrand at fixed t is exactly Gaussian with sd
            // sqrt(exp(t) / (n + kappa)).
            const double mu_sd = std::sqrt(std::exp(t) / kn);
            return log_integral([&](double u) { return log_joint(t, u); },
                                -12.0 * mu_sd, 12.0 * mu_sd);
        };
        return log_integral(inner, t0 - width * t_sd - 5.0,
                            t0 + width * t_sd + 5.0, 1e-7);
    };

    // Widen the window until the estimate stabilizes.
    double width = 12.0;
    double result = evaluate(width);
    for (int iter = 0; iter < 5; ++iter) {
        width *= 1.5;
        const double next = evaluate(width);
        if (std::abs(next - result) < 1e-9) return next;
        result = next;
    }
    return result;
}

double quadrature_log_marginal_jeffreys(std::span<const double> xs) {
    if (xs.size() < 2 || xs.size() > 8)
        throw std::invalid_argument(
            "quadrature check supports 2 to 8 points per component");
    const SampleMoments m = moments(xs);
    if (!(m.var > 0.0))
        throw DegenerateComponentError(
            "component has zero within-component variance");

    // Integrate over (u = mu - mean, t = log sigma); the 1/sigma prior
    // cancels the Jacobian sigma dt. The quadratic is kept in centered form
    // n (V + u^2) to avoid catastrophic cancellation at small sigma.
    auto log_joint = [&](double t, double u) {
        const double s2 = std::exp(2.0 * t);
        return -0.5 * m.n * (kLog2Pi + 2.0 * t) -
               0.5 * m.n * (m.var + u * u) / s2;
    };

    const double t0 = 0.5 * std::log(m.var);
    // The upper tail of the integrand in t decays like exp((1-n) t).
    const double upper = 12.0 + 45.0 / (m.n - 1.0);
    auto evaluate = [&](double width) {
        auto inner = [&](double t) {
            const double mu_sd = std::exp(t) / std::sqrt(m.n);
            return log_integral([&](double u) { return log_joint(t, u); },
                                -12.0 * mu_sd, 12.0 * mu_sd);
        };
        return log_integral(inner, t0 - width, t0 + width * upper / 12.0,
                            1e-7);
    };

    double width = 12.0;
    double result = evaluate(width);
    for (int iter = 0; iter < 5; ++iter) {
        width *= 1.5;
        const double next = evaluate(width);
        if (std::abs(next - result) < 1e-9) {
            result = next;
            break;
        }
        result = next;
    }
    // The closed form drops a constant factor 1/2 from the scale integral;
    // use the same convention so values are directly comparable.
    return result + std::log(2.0);
}

EnumeratedPosterior oracle_enumerate(const Dataset& data,
                                     const ModelSpec& spec) {
    spec.validate();
    const long n = data.n();
    const int k = spec.k;

    double total_d = std::pow(static_cast<double>(k), static_cast<double>(n));
    if (total_d > static_cast<double>(kEnumerationGuard))
        throw std::invalid_argument(
            "enumeration requires K^N <= 10^7 (requested instance is larger)");
    const long total = static_cast<long>(total_d);

    const bool is_jeffreys = spec.is_modified();
    if (std::holds_alternative<RgPrior>(spec.prior))
        throw std::invalid_argument(
            "enumeration requires a closed-form component marginal");

    EnumeratedPosterior out;
    std::vector<int> labels(n, 0);
    std::vector<long> counts(k);
    std::vector<CompStats> stats(k);

    for (long idx = 0; idx < total; ++idx) {
        std::fill(counts.begin(), counts.end(), 0);
        for (auto& s : stats) s = CompStats{};
        for (long j = 0; j < n; ++j) {
            const int c = labels[j];
            ++counts[c];
            stats[c].n += 1;
            stats[c].sum_x += data.values[j];
            stats[c].sum_x2 += data.values[j] * data.values[j];
        }

        double logw;
        if (is_jeffreys) {
            logw = log_alloc_prior_min_count(counts, spec.delta,
                                             spec.min_count);
            if (logw != kNegInf)
                for (int i = 0; i < k; ++i)
                    logw += log_marginal_jeffreys(stats[i]);
        } else {
            logw = log_alloc_prior_dirichlet(counts, spec.delta);
            const auto& prior = std::get<NigPrior>(spec.prior);
            for (int i = 0; i < k; ++i)
                logw += log_marginal_nig(stats[i], prior);
        }
        if (logw != kNegInf) {
            out.allocations.push_back(labels);
            out.log_weights.push_back(logw);
        }

        // base-K counter increment
        for (long j = 0; j < n; ++j) {
            if (++labels[j] < k) break;
            labels[j] = 0;
        }
    }

    if (out.allocations.empty())
        throw InfeasibleError("no feasible allocation (empty posterior)");
    const double lse = log_sum_exp(out.log_weights);
    out.normalized.resize(out.log_weights.size());
    for (std::size_t i = 0; i < out.log_weights.size(); ++i)
        out.normalized[i] = std::exp(out.log_weights[i] - lse);
    return out;
}

std::vector<Lemma1Row> lemma1_ratio_sweep(const Dataset& data,
                                          const Lemma1SweepConfig& cfg) {
    const long n = data.n();
    if (n <= cfg.k)
        throw std::invalid_argument("the ratio sweep requires N > K");
    if (!(cfg.c1 > 0.0) || !(cfg.c2 > 0.0))
        throw std::invalid_argument("c1 and c2 must be positive");
    if (cfg.kappa_grid.empty())
        throw std::invalid_argument("kappa grid must be non-empty");
    for (std::size_t i = 1; i < cfg.kappa_grid.size(); ++i)
        if (!(cfg.kappa_grid[i] < cfg.kappa_grid[i - 1]))
            throw std::invalid_argument("kappa grid must be strictly decreasing");

    const std::vector<double> delta =
        cfg.delta.empty() ? std::vector<double>(cfg.k, 1.0) : cfg.delta;

    auto log_posterior = [&](const std::vector<int>& labels,
                             const NigPrior& prior) {
        AllocationState alloc(labels, data, cfg.k);
        double acc = log_alloc_prior_dirichlet(alloc.counts, delta);
        for (int i = 0; i < cfg.k; ++i)
            acc += log_marginal_nig(alloc.stats(i), prior);
        return acc;
    };

    std::vector<Lemma1Row> rows;
    rows.reserve(cfg.kappa_grid.size());
    for (double kappa : cfg.kappa_grid) {
        const NigPrior prior{cfg.c1 * kappa, cfg.c2 * kappa, kappa};
        rows.push_back({kappa, log_posterior(cfg.g_prime, prior) -
                                   log_posterior(cfg.g_double_prime, prior)});
    }
    return rows;
}

}  // namespace gmix
