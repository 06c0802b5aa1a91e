#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "gmix/diagnostics.hpp"

using namespace gmix;

TEST_CASE("histogram bins, closure of the last bin, density normalization") {
    std::vector<double> draws{0.0, 0.5, 1.0, 1.5, 2.0};
    const auto h = histogram(draws, 4);
    REQUIRE(h.bin_edges.size() == 5);
    REQUIRE(h.bin_counts.size() == 4);
    CHECK(h.bin_edges.front() == doctest::Approx(0.0));
    CHECK(h.bin_edges.back() == doctest::Approx(2.0));
    // The maximum lands in the last bin, not past it.
    CHECK(h.bin_counts == std::vector<long>{1, 1, 1, 2});

    double integral = 0.0;
    for (std::size_t i = 0; i < h.bin_counts.size(); ++i)
        integral +=
            h.normalized_density[i] * (h.bin_edges[i + 1] - h.bin_edges[i]);
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("histogram of constant draws uses a unit-width window") {
    std::vector<double> draws(10, 3.0);
    const auto h = histogram(draws, 5);
    CHECK(h.bin_edges.back() - h.bin_edges.front() == doctest::Approx(1.0));
    CHECK(std::accumulate(h.bin_counts.begin(), h.bin_counts.end(), 0L) == 10);
}

TEST_CASE("histogram with explicit edges drops out-of-range draws") {
    std::vector<double> draws{-1.0, 0.5, 1.5, 3.0};
    std::vector<double> edges{0.0, 1.0, 2.0};
    const auto h = histogram_with_edges(draws, edges);
    CHECK(h.bin_counts == std::vector<long>{1, 1});
}

TEST_CASE("binned TV distance: identical, disjoint, and sampled overlap") {
    std::vector<double> a{0.0, 0.3, 0.7, 1.0};
    CHECK(binned_tv_distance(a, a, 10) == doctest::Approx(0.0));

    std::vector<double> b{5.0, 5.5, 6.0};
    CHECK(binned_tv_distance(a, b, 10) == doctest::Approx(1.0));

    // Two large samples from the same distribution should be close.
    std::mt19937_64 rng(2);
    std::normal_distribution<double> norm(0.0, 1.0);
    std::vector<double> c(20'000), d(20'000);
    for (double& x : c) x = norm(rng);
    for (double& x : d) x = norm(rng);
    CHECK(binned_tv_distance(c, d) < 0.05);
}

TEST_CASE("mode detection on a well-separated bimodal sample") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> left(-3.0, 0.5), right(3.0, 0.5);
    std::vector<double> draws;
    for (int i = 0; i < 10'000; ++i) {
        draws.push_back(left(rng));
        draws.push_back(right(rng));
    }
    const auto modes = histogram_modes(draws, 60);
    REQUIRE(modes.size() == 2);
    CHECK(modes[0] == doctest::Approx(-3.0).epsilon(0.15));
    CHECK(modes[1] == doctest::Approx(3.0).epsilon(0.15));

    // A unimodal sample yields one mode.
    std::vector<double> uni;
    for (int i = 0; i < 10'000; ++i) uni.push_back(left(rng));
    CHECK(histogram_modes(uni, 60).size() == 1);
}

TEST_CASE("posterior-sample summaries") {
    PosteriorSamples s;
    s.k = 2;
    s.n_data = 4;
    s.mu = {{-1.0, 1.0}, {1.0, -1.0}, {-1.2, 1.2}};
    s.sigma2 = {{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
    s.weights = {{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}};
    s.counts = {{2, 2}, {3, 1}, {0, 4}};
    s.empty_flags = {0, 0, 1};

    CHECK(empty_component_fraction(s) == doctest::Approx(1.0 / 3.0));

    const auto pooled = pooled_mu_draws(s);
    CHECK(pooled.size() == 6);

    const auto counts0 = count_posterior_summary(s, 0);
    // Integer bins covering 0..3.
    REQUIRE(counts0.bin_counts.size() == 4);
    CHECK(counts0.bin_counts == std::vector<long>{1, 0, 1, 1});

    // Components visiting the same set of values have symmetric marginals.
    CHECK(mode_symmetry_score(s, 0, 1, 4) < 0.5);
}

TEST_CASE("mode symmetry score separates mixing from label-stuck chains") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> left(-2.0, 0.3), right(2.0, 0.3);
    std::bernoulli_distribution coin(0.5);

    PosteriorSamples mixing, stuck;
    for (auto* s : {&mixing, &stuck}) {
        s->k = 2;
        s->n_data = 10;
    }
    for (int t = 0; t < 20'000; ++t) {
        const bool flip = coin(rng);
        const double a = left(rng), b = right(rng);
        mixing.mu.push_back(flip ? std::vector<double>{a, b}
                                 : std::vector<double>{b, a});
        stuck.mu.push_back({left(rng), right(rng)});
    }
    CHECK(mode_symmetry_score(mixing, 0, 1) < 0.05);
    CHECK(mode_symmetry_score(stuck, 0, 1) > 0.9);
}
