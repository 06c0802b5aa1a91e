#include "gmix/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>
#include <vector>

#include "gmix/errors.hpp"
#include "gmix/marginals.hpp"
#include "gmix/random.hpp"

namespace gmix {

namespace {

constexpr double kLogPi = 1.1447298858494001741;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr long kMaxInitAttempts = 200'000;

// Below this alpha, an inverse-gamma prior draw for an empty component is
// numerically unreliable (matching the guard used for the reference runs).
constexpr double kMinAlphaForEmptyDraw = 0.01;

std::vector<double> quantile_starts(const Dataset& data, int k) {
    std::vector<double> sorted = data.values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> mu(k);
    const long n = static_cast<long>(sorted.size());
    for (int i = 0; i < k; ++i) {
        const double q = (i + 0.5) / k;
        const long idx = std::min<long>(n - 1, static_cast<long>(q * n));
        mu[i] = sorted[idx];
    }
    return mu;
}

void check_feasible(long n, const ModelSpec& spec) {
    if (n < static_cast<long>(spec.min_count) * spec.k)
        throw InfeasibleError("no allocation satisfies the min-count: N < m*K");
}

bool counts_feasible(const std::vector<long>& counts, int m) {
    for (long c : counts)
        if (c < m) return false;
    return true;
}

bool any_empty(const std::vector<long>& counts) {
    for (long c : counts)
        if (c == 0) return true;
    return false;
}

// lgamma(n + alpha_shift) for n = 0..n_max at half-integer steps, used to
// avoid recomputing lgamma in the sweep inner loop.
std::vector<double> lgamma_table(long n_max, double shift, double step) {
    std::vector<double> t(n_max + 1);
    for (long n = 0; n <= n_max; ++n)
        t[n] = std::lgamma(step * static_cast<double>(n) + shift);
    return t;
}

struct NigMarginal {
    NigPrior prior;
    double const_term;
    std::vector<double> lg_half_n_alpha;  // lgamma(n/2 + alpha)
    std::vector<double> log_nk;           // log(n + kappa)

    NigMarginal(const NigPrior& p, long n_max) : prior(p) {
        const_term = p.alpha * std::log(2.0 * p.beta) +
                     0.5 * std::log(p.kappa) - std::lgamma(p.alpha);
        lg_half_n_alpha = lgamma_table(n_max, p.alpha, 0.5);
        log_nk.resize(n_max + 1);
        for (long n = 0; n <= n_max; ++n)
            log_nk[n] = std::log(static_cast<double>(n) + p.kappa);
    }

    double operator()(const CompStats& s) const {
        if (s.n == 0) return 0.0;
        const double n = static_cast<double>(s.n);
        const double nk = n + prior.kappa;
        const double m = s.sum_x / nk;
        const double bracket = s.sum_x2 / nk - m * m + 2.0 * prior.beta / nk;
        return const_term + lg_half_n_alpha[s.n] - 0.5 * n * kLogPi -
               (0.5 * (n + 1.0) + prior.alpha) * log_nk[s.n] -
               (0.5 * n + prior.alpha) * std::log(bracket);
    }
};

struct JeffreysMarginal {
    std::vector<double> const_term;  // -(n/2) log n + lgamma((n-1)/2), n >= 2

    explicit JeffreysMarginal(long n_max) : const_term(n_max + 1, 0.0) {
        for (long n = 2; n <= n_max; ++n) {
            const double nd = static_cast<double>(n);
            const_term[n] =
                -0.5 * nd * std::log(nd) + std::lgamma(0.5 * (nd - 1.0));
        }
    }

    double operator()(const CompStats& s) const {
        if (s.n < 2)
            throw std::invalid_argument(
                "Jeffreys marginal requires at least 2 points per component");
        const double v = component_variance(s);
        if (v <= 0.0)
            throw DegenerateComponentError(
                "component has zero within-component variance");
        return 0.5 * (1.0 - static_cast<double>(s.n)) * (kLogPi + std::log(v)) +
               const_term[s.n];
    }
};

struct SaveBuffers {
    std::vector<double> mu, sigma2, w;
};

void save_state(PosteriorSamples& out, const ChainConfig& cfg,
                const std::vector<double>& mu, const std::vector<double>& sigma2,
                const std::vector<double>& w, const std::vector<long>& counts,
                const std::vector<int>& labels) {
    out.mu.push_back(mu);
    out.sigma2.push_back(sigma2);
    out.weights.push_back(w);
    out.counts.push_back(counts);
    out.empty_flags.push_back(any_empty(counts) ? 1 : 0);
    if (cfg.keep_allocations) out.allocations.push_back(labels);
}

}  // namespace

double wrap_into(double v, double lo, double hi) {
    const double range = hi - lo;
    double r = std::fmod(v - lo, range);
    if (r < 0.0) r += range;
    return lo + r;
}

double reflect_at(double v, double lo) { return v < lo ? 2.0 * lo - v : v; }

PosteriorSamples run_da_gibbs(const Dataset& data, const ModelSpec& spec,
                              const ChainConfig& cfg) {
    spec.validate();
    cfg.validate();
    const bool is_rg = std::holds_alternative<RgPrior>(spec.prior);
    if (!std::holds_alternative<NigPrior>(spec.prior) && !is_rg)
        throw std::invalid_argument(
            "data-augmentation Gibbs requires a standard (NIG or RG) prior");

    const long n = data.n();
    const int k = spec.k;
    RngStream rng(cfg.seed);

    const double alpha = is_rg ? std::get<RgPrior>(spec.prior).alpha
                               : std::get<NigPrior>(spec.prior).alpha;
    const double kappa = is_rg ? std::get<RgPrior>(spec.prior).kappa
                               : std::get<NigPrior>(spec.prior).kappa;

    std::vector<double> mu = quantile_starts(data, k);
    std::vector<double> sigma2(k, std::max(1e-12, data.stddev() * data.stddev()));
    std::vector<double> p(k, 1.0 / k);
    double beta_hyper = 0.0;
    if (is_rg) {
        const auto& rp = std::get<RgPrior>(spec.prior);
        beta_hyper = rp.g / rp.h;  // prior mean
    }

    std::vector<int> labels(n, 0);
    std::vector<long> counts(k, 0);
    std::vector<double> sum_x(k, 0.0), sum_x2(k, 0.0);
    std::vector<double> logw(k);
    std::vector<double> post_delta(k);

    PosteriorSamples out;
    out.k = k;
    out.n_data = n;
    out.reserve(cfg.saved_states());

    const long total = cfg.burn_in + cfg.post_burn_in;
    for (long iter = 1; iter <= total; ++iter) {
        // (a) allocations given parameters and weights
        std::fill(counts.begin(), counts.end(), 0);
        std::fill(sum_x.begin(), sum_x.end(), 0.0);
        std::fill(sum_x2.begin(), sum_x2.end(), 0.0);
        for (long j = 0; j < n; ++j) {
            const double x = data.values[j];
            for (int i = 0; i < k; ++i)
                logw[i] =
                    std::log(p[i]) + log_normal_pdf(x, mu[i], std::sqrt(sigma2[i]));
            const int c = rng.categorical_from_log(logw);
            labels[j] = c;
            ++counts[c];
            sum_x[c] += x;
            sum_x2[c] += x * x;
        }

        // (b) weights given allocations
        for (int i = 0; i < k; ++i)
            post_delta[i] = spec.delta[i] + static_cast<double>(counts[i]);
        p = rng.dirichlet(post_delta);

        // (c) component parameters given allocations
        for (int i = 0; i < k; ++i) {
            const double ni = static_cast<double>(counts[i]);
            if (counts[i] == 0 && alpha < kMinAlphaForEmptyDraw)
                throw NumericError(
                    "alpha below 0.01 with an empty component: prior draw for "
                    "its variance is numerically unstable");
            if (!is_rg) {
                const auto& np = std::get<NigPrior>(spec.prior);
                const double nk = ni + np.kappa;
                const double bn =
                    np.beta + 0.5 * (sum_x2[i] - sum_x[i] * sum_x[i] / nk);
                sigma2[i] = rng.inv_gamma(np.alpha + 0.5 * ni, bn);
                mu[i] = rng.normal(sum_x[i] / nk, std::sqrt(sigma2[i] / nk));
            } else {
                const auto& rp = std::get<RgPrior>(spec.prior);
                // sigma^2 | mu, beta then mu | sigma^2
                const double ss =
                    sum_x2[i] - 2.0 * mu[i] * sum_x[i] + ni * mu[i] * mu[i];
                sigma2[i] = rng.inv_gamma(rp.alpha + 0.5 * ni,
                                          beta_hyper + 0.5 * ss);
                const double prec = ni / sigma2[i] + rp.kappa;
                mu[i] = rng.normal((sum_x[i] / sigma2[i]) / prec,
                                   std::sqrt(1.0 / prec));
            }
        }

        // (d) shared rate hyperparameter for the hierarchical prior
        if (is_rg) {
            const auto& rp = std::get<RgPrior>(spec.prior);
            double inv_sum = 0.0;
            for (int i = 0; i < k; ++i) inv_sum += 1.0 / sigma2[i];
            beta_hyper = rng.gamma(rp.g + k * rp.alpha, rp.h + inv_sum);
        }

        if (iter > cfg.burn_in && (iter - cfg.burn_in) % cfg.thin == 0)
            save_state(out, cfg, mu, sigma2, p, counts, labels);
    }
    return out;
}

PosteriorSamples run_collapsed_gibbs(const Dataset& data, const ModelSpec& spec,
                                     const ChainConfig& cfg) {
    spec.validate();
    cfg.validate();
    const bool is_jeffreys = spec.is_modified();
    if (std::holds_alternative<RgPrior>(spec.prior))
        throw std::invalid_argument(
            "the hierarchical (RG) prior has no closed-form component marginal "
            "and cannot be collapsed");
    check_feasible(data.n(), spec);

    const long n = data.n();
    const int k = spec.k;
    const int m = spec.min_count;
    RngStream rng(cfg.seed);

    const NigPrior nig = is_jeffreys
                             ? NigPrior{1.0, 1.0, 1.0}  // unused
                             : std::get<NigPrior>(spec.prior);
    NigMarginal nig_marg(nig, n + 1);
    JeffreysMarginal jef_marg(n + 1);
    auto marginal = [&](const CompStats& s) {
        return is_jeffreys ? jef_marg(s) : nig_marg(s);
    };

    // lgamma(c + delta_i) for c = 0..n+1, shared by both allocation priors.
    std::vector<std::vector<double>> lg_delta(k);
    for (int i = 0; i < k; ++i) lg_delta[i] = lgamma_table(n + 1, spec.delta[i], 1.0);

    // Initialize uniformly at random, rejecting infeasible allocations.
    std::vector<int> labels(n);
    AllocationState alloc;
    for (long attempt = 0;; ++attempt) {
        if (attempt >= kMaxInitAttempts)
            throw ConvergenceError(
                "failed to draw a feasible initial allocation");
        for (long j = 0; j < n; ++j) labels[j] = rng.uniform_int(0, k - 1);
        alloc = AllocationState(labels, data, k);
        if (counts_feasible(alloc.counts, m)) break;
    }

    PosteriorSamples out;
    out.k = k;
    out.n_data = n;
    out.reserve(cfg.saved_states());

    std::vector<double> logw(k);
    const long total = cfg.burn_in + cfg.post_burn_in;
    for (long iter = 1; iter <= total; ++iter) {
        for (long j = 0; j < n; ++j) {
            const double x = data.values[j];
            const int old = alloc.labels[j];
            alloc.remove_point(j, x);

            // After removal, at most the point's old component can be below
            // the min-count; if so it is the only feasible destination.
            if (m > 0 && alloc.counts[old] < m) {
                alloc.insert_point(j, x, old);
                continue;
            }

            for (int i = 0; i < k; ++i) {
                const CompStats base = alloc.stats(i);
                const double dg =
                    lg_delta[i][base.n + 1] - lg_delta[i][base.n];
                logw[i] = dg + marginal(base + x) -
                          (base.n == 0 ? 0.0 : marginal(base));
            }
            alloc.insert_point(j, x, rng.categorical_from_log(logw));
        }
        alloc.recompute(data);

        if (iter > cfg.burn_in && (iter - cfg.burn_in) % cfg.thin == 0) {
            // Retrospective draw of component parameters given the allocation.
            std::vector<double> mu(k), sigma2(k), w(k);
            if (is_jeffreys) {
                for (int i = 0; i < k; ++i) {
                    const long ni = alloc.counts[i];
                    if (ni < m)
                        throw std::logic_error(
                            "min-count violated in a saved state");
                    const double v = component_variance(alloc.stats(i));
                    if (v <= 0.0)
                        throw DegenerateComponentError(
                            "component has zero within-component variance");
                    const double nd = static_cast<double>(ni);
                    sigma2[i] =
                        rng.inv_gamma(0.5 * (nd - 1.0), 0.5 * nd * v);
                    mu[i] = rng.normal(alloc.sum_x[i] / nd,
                                       std::sqrt(sigma2[i] / nd));
                    w[i] = nd / static_cast<double>(n);
                }
            } else {
                for (int i = 0; i < k; ++i) {
                    const double ni = static_cast<double>(alloc.counts[i]);
                    if (alloc.counts[i] == 0 && nig.alpha < kMinAlphaForEmptyDraw)
                        throw NumericError(
                            "alpha below 0.01 with an empty component: prior "
                            "draw for its variance is numerically unstable");
                    const double nk = ni + nig.kappa;
                    const double bn =
                        nig.beta +
                        0.5 * (alloc.sum_x2[i] -
                               alloc.sum_x[i] * alloc.sum_x[i] / nk);
                    sigma2[i] = rng.inv_gamma(nig.alpha + 0.5 * ni, bn);
                    mu[i] = rng.normal(alloc.sum_x[i] / nk,
                                       std::sqrt(sigma2[i] / nk));
                }
                std::vector<double> post_delta(k);
                for (int i = 0; i < k; ++i)
                    post_delta[i] =
                        spec.delta[i] + static_cast<double>(alloc.counts[i]);
                w = rng.dirichlet(post_delta);
            }
            save_state(out, cfg, mu, sigma2, w, alloc.counts, alloc.labels);
        }
    }
    return out;
}

PosteriorSamples run_metropolis_hastings(const Dataset& data,
                                         const ModelSpec& spec,
                                         const ChainConfig& cfg) {
    spec.validate();
    cfg.validate();
    if (!spec.is_modified())
        throw std::invalid_argument(
            "the Metropolis-Hastings scheme targets the min-count Jeffreys "
            "model");
    check_feasible(data.n(), spec);
    if (data.min() < cfg.mu_min || data.max() > cfg.mu_max)
        throw std::invalid_argument(
            "data range lies outside [mu_min, mu_max]");

    const long n = data.n();
    const int k = spec.k;
    const int m = spec.min_count;
    RngStream rng(cfg.seed);

    std::vector<std::vector<double>> lg_delta(k);
    for (int i = 0; i < k; ++i) lg_delta[i] = lgamma_table(n, spec.delta[i], 1.0);
    auto log_min_count_prior = [&](const std::vector<long>& counts) {
        double acc = 0.0;
        for (int i = 0; i < k; ++i) {
            if (counts[i] < m) return kNegInf;
            acc += lg_delta[i][counts[i]];
        }
        return acc;
    };

    // Proposal for G given (mu, sigma): each point drawn independently with
    // probability proportional to the component density (uniform weights).
    // Fills labels/counts and returns {log g(G | mu, sigma), log f(x|...,G)}.
    std::vector<double> col(k);
    auto draw_alloc = [&](const std::vector<double>& mu,
                          const std::vector<double>& sigma,
                          std::vector<int>& labels, std::vector<long>& counts) {
        std::fill(counts.begin(), counts.end(), 0);
        double log_g = 0.0, log_lik = 0.0;
        for (long j = 0; j < n; ++j) {
            for (int i = 0; i < k; ++i)
                col[i] = log_normal_pdf(data.values[j], mu[i], sigma[i]);
            const double lse = log_sum_exp(col);
            const int c = rng.categorical_from_log(col);
            labels[j] = c;
            ++counts[c];
            log_g += col[c] - lse;
            log_lik += col[c];
        }
        return std::pair<double, double>{log_g, log_lik};
    };

    auto log_sigma_prior = [&](const std::vector<double>& sigma) {
        double acc = 0.0;
        for (double s : sigma) acc -= std::log(s);
        return acc;
    };

    std::vector<double> cur_mu = quantile_starts(data, k);
    std::vector<double> cur_sigma(k,
                                  std::max(cfg.sigma_min, data.stddev()));
    std::vector<int> cur_labels(n), prop_labels(n);
    std::vector<long> cur_counts(k), prop_counts(k);

    double cur_logg = 0.0, cur_loglik = 0.0;
    {
        long attempt = 0;
        do {
            if (attempt++ >= kMaxInitAttempts)
                throw ConvergenceError(
                    "failed to draw a feasible initial allocation");
            std::tie(cur_logg, cur_loglik) =
                draw_alloc(cur_mu, cur_sigma, cur_labels, cur_counts);
        } while (!counts_feasible(cur_counts, m));
    }
    double cur_logpi = log_min_count_prior(cur_counts);
    double cur_logprior = log_sigma_prior(cur_sigma);

    PosteriorSamples out;
    out.k = k;
    out.n_data = n;
    out.reserve(cfg.saved_states());

    std::vector<double> prop_mu(k), prop_sigma(k);
    const long total = cfg.burn_in + cfg.post_burn_in;
    for (long iter = 1; iter <= total; ++iter) {
        for (int i = 0; i < k; ++i) {
            prop_mu[i] = wrap_into(cur_mu[i] + rng.normal(0.0, cfg.mu_step),
                                   cfg.mu_min, cfg.mu_max);
            prop_sigma[i] = reflect_at(
                cur_sigma[i] + rng.normal(0.0, cfg.sigma_step), cfg.sigma_min);
        }
        const auto [prop_logg, prop_loglik] =
            draw_alloc(prop_mu, prop_sigma, prop_labels, prop_counts);
        const double prop_logpi = log_min_count_prior(prop_counts);
        const double prop_logprior = log_sigma_prior(prop_sigma);

        const double log_accept =
            (cur_logg - prop_logg) +
            (prop_loglik + prop_logpi + prop_logprior) -
            (cur_loglik + cur_logpi + cur_logprior);
        if (std::log(rng.uniform()) < log_accept) {
            cur_mu = prop_mu;
            cur_sigma = prop_sigma;
            cur_labels = prop_labels;
            cur_counts = prop_counts;
            cur_logg = prop_logg;
            cur_loglik = prop_loglik;
            cur_logpi = prop_logpi;
            cur_logprior = prop_logprior;
        }

        if (iter > cfg.burn_in && (iter - cfg.burn_in) % cfg.thin == 0) {
            if (!counts_feasible(cur_counts, m))
                throw std::logic_error("min-count violated in a saved state");
            std::vector<double> mu = cur_mu, sigma2(k), w(k);
            for (int i = 0; i < k; ++i) {
                sigma2[i] = cur_sigma[i] * cur_sigma[i];
                w[i] = static_cast<double>(cur_counts[i]) /
                       static_cast<double>(n);
            }
            save_state(out, cfg, mu, sigma2, w, cur_counts, cur_labels);
        }
    }
    return out;
}

PosteriorSamples run_chain(const Dataset& data, const ModelSpec& spec,
                           const ChainConfig& cfg) {
    switch (cfg.sampler) {
        case SamplerKind::DaGibbs:
            return run_da_gibbs(data, spec, cfg);
        case SamplerKind::CollapsedGibbs:
            return run_collapsed_gibbs(data, spec, cfg);
        case SamplerKind::MetropolisHastings:
            return run_metropolis_hastings(data, spec, cfg);
    }
    throw std::invalid_argument("unknown sampler");
}

}  // namespace gmix
