#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "gmix/allocation.hpp"
#include "gmix/errors.hpp"
#include "gmix/marginals.hpp"
#include "test_util.hpp"

using namespace gmix;

namespace {
CompStats stats_of(const std::vector<double>& xs) {
    CompStats s;
    for (double x : xs) {
        s.n += 1;
        s.sum_x += x;
        s.sum_x2 += x * x;
    }
    return s;
}
}  // namespace

TEST_CASE("NIG marginal: empty component contributes factor 1") {
    CHECK(log_marginal_nig(CompStats{}, {1.0, 1.0, 1.0}) == 0.0);
    CHECK(log_marginal_nig(CompStats{}, {0.01, 0.01, 0.01}) == 0.0);
}

TEST_CASE("NIG marginal: single point at zero with unit hyperparameters") {
    const double got = log_marginal_nig(stats_of({0.0}), {1.0, 1.0, 1.0});
    CHECK(got == doctest::Approx(std::log(0.25)).epsilon(1e-12));
}

TEST_CASE("Jeffreys marginal: two points") {
    // V = 1, so the value is pi^{-1/2} * 2^{-1} * Gamma(1/2) = 1/2.
    const double got = log_marginal_jeffreys(stats_of({0.0, 2.0}));
    CHECK(got == doctest::Approx(std::log(0.5)).epsilon(1e-12));
}

TEST_CASE("Jeffreys marginal: identical points are degenerate") {
    CHECK_THROWS_AS(log_marginal_jeffreys(stats_of({3.0, 3.0})),
                    DegenerateComponentError);
}

TEST_CASE("Jeffreys marginal: three points") {
    // V = 2/3, value = 3^{-1/2} / (2 pi).
    const double expected = std::log(1.0 / (std::sqrt(3.0) * 2.0 * std::numbers::pi));
    const double got = log_marginal_jeffreys(stats_of({-1.0, 0.0, 1.0}));
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("Jeffreys marginal: fewer than two points rejected") {
    CHECK_THROWS_AS(log_marginal_jeffreys(stats_of({1.0})),
                    std::invalid_argument);
}

TEST_CASE("Dirichlet allocation prior: known values") {
    const std::vector<double> delta{1.0, 1.0};
    const std::vector<long> even{2, 2};
    const std::vector<long> all_one{4, 0};
    CHECK(log_alloc_prior_dirichlet(even, delta) ==
          doctest::Approx(std::log(1.0 / 30.0)).epsilon(1e-12));
    CHECK(log_alloc_prior_dirichlet(all_one, delta) ==
          doctest::Approx(std::log(1.0 / 5.0)).epsilon(1e-12));
}

TEST_CASE("Dirichlet allocation prior is a proper distribution") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.2, 3.0);
    for (int k = 2; k <= 3; ++k) {
        for (long n : {4L, 6L, 8L}) {
            std::vector<double> delta(k);
            for (double& d : delta) d = unif(rng);
            double total = 0.0;
            for_each_allocation(n, k, [&](const std::vector<int>& labels) {
                std::vector<long> counts(k, 0);
                for (int c : labels) ++counts[c];
                total += std::exp(log_alloc_prior_dirichlet(counts, delta));
            });
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("min-count allocation prior: known values and indicator") {
    const std::vector<double> delta{1.0, 1.0};
    CHECK(log_alloc_prior_min_count(std::vector<long>{2, 2}, delta, 2) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(log_alloc_prior_min_count(std::vector<long>{3, 1}, delta, 2) ==
          -std::numeric_limits<double>::infinity());
}

TEST_CASE("min-count prior gives equal mass to every feasible count vector") {
    // With unit delta the unnormalized mass of each feasible count vector,
    // summed over its allocations, is N! for K = 2.
    const std::vector<double> delta{1.0, 1.0};
    for (long n : {6L, 8L}) {
        std::vector<double> mass(n + 1, 0.0);
        for_each_allocation(n, 2, [&](const std::vector<int>& labels) {
            std::vector<long> counts(2, 0);
            for (int c : labels) ++counts[c];
            const double lp = log_alloc_prior_min_count(counts, delta, 2);
            if (std::isfinite(lp)) mass[counts[0]] += std::exp(lp);
        });
        const double factorial_n = std::tgamma(static_cast<double>(n) + 1.0);
        for (long n1 = 2; n1 <= n - 2; ++n1)
            CHECK(mass[n1] == doctest::Approx(factorial_n).epsilon(1e-10));
        CHECK(mass[0] == 0.0);
        CHECK(mass[1] == 0.0);
    }
}

TEST_CASE("log-domain evaluation stays finite at large scales") {
    // Data magnitudes up to 1e6, component sizes up to 1e5.
    CompStats s;
    s.n = 100'000;
    s.sum_x = 1e6 * static_cast<double>(s.n);
    s.sum_x2 = (1e12 + 1e4) * static_cast<double>(s.n);  // variance 1e4
    CHECK(std::isfinite(log_marginal_nig(s, {0.01, 0.01, 0.01})));
    CHECK(std::isfinite(log_marginal_nig(s, {10.0, 10.0, 10.0})));
    CHECK(std::isfinite(log_marginal_jeffreys(s)));

    std::vector<long> counts{100'000, 50'000};
    std::vector<double> delta{1.0, 1.0};
    CHECK(std::isfinite(log_alloc_prior_dirichlet(counts, delta)));
    CHECK(std::isfinite(log_alloc_prior_min_count(counts, delta, 2)));
}

TEST_CASE("completed-data log likelihood") {
    Dataset data({0.0});
    ComponentParams params;
    params.mu = {0.0};
    params.sigma = {1.0};
    const std::vector<int> labels{0};
    CHECK(log_likelihood_given_alloc(data, params, labels) ==
          doctest::Approx(-0.5 * std::log(2.0 * std::numbers::pi))
              .epsilon(1e-12));
}

TEST_CASE("likelihood is invariant to relabeling components") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> norm(0.0, 2.0);
    std::vector<double> xs(12);
    for (double& x : xs) x = norm(rng);
    Dataset data(xs);

    ComponentParams params;
    params.mu = {-1.0, 0.5, 2.0};
    params.sigma = {0.7, 1.3, 2.2};
    std::vector<int> labels(12);
    for (auto& c : labels) c = static_cast<int>(rng() % 3);

    const double base = log_likelihood_given_alloc(data, params, labels);

    // Swap components 0 and 2 together with the labels.
    ComponentParams swapped = params;
    std::swap(swapped.mu[0], swapped.mu[2]);
    std::swap(swapped.sigma[0], swapped.sigma[2]);
    std::vector<int> relabeled = labels;
    for (auto& c : relabeled) c = (c == 0) ? 2 : (c == 2 ? 0 : c);
    CHECK(log_likelihood_given_alloc(data, swapped, relabeled) ==
          doctest::Approx(base).epsilon(1e-12));

    // Matches a direct per-point recomputation.
    double direct = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j)
        direct += log_normal_pdf(xs[j], params.mu[labels[j]],
                                 params.sigma[labels[j]]);
    CHECK(base == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("incremental sufficient statistics do not drift") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-100.0, 100.0);
    const long n = 200;
    const int k = 3;
    std::vector<double> xs(n);
    for (double& x : xs) x = unif(rng);
    Dataset data(xs);

    std::vector<int> labels(n);
    for (auto& c : labels) c = static_cast<int>(rng() % k);
    AllocationState alloc(labels, data, k);

    for (int step = 0; step < 20'000; ++step) {
        const long j = static_cast<long>(rng() % n);
        alloc.remove_point(j, xs[j]);
        alloc.insert_point(j, xs[j], static_cast<int>(rng() % k));
    }

    AllocationState fresh(alloc.labels, data, k);
    for (int i = 0; i < k; ++i) {
        CHECK(alloc.counts[i] == fresh.counts[i]);
        CHECK(alloc.sum_x[i] ==
              doctest::Approx(fresh.sum_x[i]).epsilon(1e-9));
        CHECK(alloc.sum_x2[i] ==
              doctest::Approx(fresh.sum_x2[i]).epsilon(1e-9));
        if (fresh.counts[i] > 0) CHECK(fresh.variance(i) >= 0.0);
    }
}
