#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "gmix/errors.hpp"
#include "gmix/io.hpp"
#include "gmix/synthetic.hpp"

using namespace gmix;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("gmix_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

fs::path write_text(const fs::path& dir, const std::string& name,
                    const std::string& body) {
    const fs::path p = dir / name;
    std::ofstream out(p);
    out << body;
    return p;
}

}  // namespace

TEST_CASE("galaxy dataset loads with the expected shape") {
    const Dataset data = load_dataset(fs::path(GMIX_DATA_DIR) / "galaxy.txt");
    CHECK(data.n() == 82);
    CHECK(data.min() == doctest::Approx(9.172));
    CHECK(data.max() == doctest::Approx(34.279));
    CHECK(data.mean() == doctest::Approx(20.8315).epsilon(1e-3));
}

TEST_CASE("dataset parsing: comments, blanks, and malformed lines") {
    TempDir tmp;
    const auto ok = write_text(tmp.path, "ok.txt",
                               "# heading\n1.5\n\n  2.5  \n-3e-1\n");
    const Dataset data = load_dataset(ok);
    REQUIRE(data.n() == 3);
    CHECK(data.values[0] == doctest::Approx(1.5));
    CHECK(data.values[1] == doctest::Approx(2.5));
    CHECK(data.values[2] == doctest::Approx(-0.3));

    const auto bad = write_text(tmp.path, "bad.txt", "1.0\nnot-a-number\n");
    try {
        load_dataset(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 2);
    }

    const auto empty = write_text(tmp.path, "empty.txt", "# nothing\n\n");
    CHECK_THROWS_AS(load_dataset(empty), std::runtime_error);
    CHECK_THROWS_AS(load_dataset(tmp.path / "missing.txt"),
                    std::runtime_error);
}

TEST_CASE("samples CSV round-trips exactly") {
    PosteriorSamples s;
    s.k = 2;
    s.n_data = 5;
    s.mu = {{-1.25, 1.0 / 3.0}, {0.1, 2.0}};
    s.sigma2 = {{0.5, 1.7}, {1.0, 0.09}};
    s.weights = {{0.25, 0.75}, {0.6, 0.4}};
    s.counts = {{2, 3}, {0, 5}};
    s.empty_flags = {0, 1};

    TempDir tmp;
    const fs::path p = tmp.path / "samples.csv";
    save_samples(s, p);
    const auto back = load_samples(p);
    CHECK(back.k == s.k);
    CHECK(back.mu == s.mu);          // exact: shortest round-trip formatting
    CHECK(back.sigma2 == s.sigma2);
    CHECK(back.weights == s.weights);
    CHECK(back.counts == s.counts);
    CHECK(back.empty_flags == s.empty_flags);

    // Re-saving the loaded samples reproduces the file byte for byte.
    const fs::path p2 = tmp.path / "samples2.csv";
    save_samples(back, p2);
    CHECK(file_digest(p) == file_digest(p2));
}

TEST_CASE("allocation files round-trip") {
    PosteriorSamples s;
    s.k = 3;
    s.n_data = 4;
    s.allocations = {{0, 1, 2, 0}, {2, 2, 1, 0}};

    TempDir tmp;
    const fs::path p = tmp.path / "alloc.txt";
    save_allocations(s, p);
    CHECK(load_allocations(p) == s.allocations);
}

TEST_CASE("histogram CSV has one row per bin") {
    std::vector<double> draws{0.0, 1.0, 2.0, 3.0};
    const auto h = histogram(draws, 3);
    TempDir tmp;
    const fs::path p = tmp.path / "hist.csv";
    save_histogram(h, p);

    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    CHECK(line == "bin_left,bin_right,count,density");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("file digest is stable and content-sensitive") {
    TempDir tmp;
    const auto a = write_text(tmp.path, "a.txt", "hello\n");
    const auto b = write_text(tmp.path, "b.txt", "hello\n");
    const auto c = write_text(tmp.path, "c.txt", "hello!\n");
    CHECK(file_digest(a) == file_digest(b));
    CHECK(file_digest(a) != file_digest(c));
    CHECK(file_digest(a).size() == 16);
}

TEST_CASE("shortest round-trip double formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-1.25) == "-1.25");
    const double v = 1.0 / 3.0;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("synthetic generator: determinism and moments") {
    const auto spec = SyntheticSpec::two_component_overlap(50'000, 42);
    const auto a = sample_mixture(spec);
    const auto b = sample_mixture(spec);
    CHECK(a.data.values == b.data.values);
    CHECK(a.labels == b.labels);

    auto other = spec;
    other.seed = 43;
    CHECK(sample_mixture(other).data.values != a.data.values);

    REQUIRE(a.data.n() == 50'000);
    CHECK(a.data.mean() == doctest::Approx(0.0).epsilon(0.05));
    // Mixture variance: 1 + 1.25^2.
    const double sd = a.data.stddev();
    CHECK(sd * sd == doctest::Approx(1.0 + 1.25 * 1.25).epsilon(0.05));

    long n0 = 0;
    for (int lab : a.labels)
        if (lab == 0) ++n0;
    CHECK(static_cast<double>(n0) / 50'000.0 ==
          doctest::Approx(0.5).epsilon(0.02));

    // Within-label means match the component means.
    double m0 = 0.0, m1 = 0.0;
    for (long i = 0; i < a.data.n(); ++i)
        (a.labels[i] == 0 ? m0 : m1) += a.data.values[i];
    m0 /= static_cast<double>(n0);
    m1 /= static_cast<double>(50'000 - n0);
    CHECK(m0 == doctest::Approx(-1.25).epsilon(0.02));
    CHECK(m1 == doctest::Approx(1.25).epsilon(0.02));

    SyntheticSpec bad = spec;
    bad.weights = {0.7, 0.7};
    CHECK_THROWS_AS(sample_mixture(bad), std::invalid_argument);
}
