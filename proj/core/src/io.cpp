#include "gmix/io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gmix/errors.hpp"

namespace gmix {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& tok, long line) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("cannot parse number '" + tok + "'", line);
    return v;
}

long parse_long(const std::string& tok, long line) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("cannot parse integer '" + tok + "'", line);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

Dataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path.string());
    std::vector<double> values;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        values.push_back(parse_double(t, line_no));
    }
    if (values.empty())
        throw std::runtime_error("dataset is empty: " + path.string());
    return Dataset(std::move(values));
}

void save_samples(const PosteriorSamples& samples,
                  const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "state";
    for (int i = 1; i <= samples.k; ++i) out << ",mu_" << i;
    for (int i = 1; i <= samples.k; ++i) out << ",sigma2_" << i;
    for (int i = 1; i <= samples.k; ++i) out << ",w_" << i;
    for (int i = 1; i <= samples.k; ++i) out << ",n_" << i;
    out << ",empty\n";
    for (long s = 0; s < samples.n_saved(); ++s) {
        out << s;
        for (double v : samples.mu[s]) out << ',' << format_double(v);
        for (double v : samples.sigma2[s]) out << ',' << format_double(v);
        for (double v : samples.weights[s]) out << ',' << format_double(v);
        for (long v : samples.counts[s]) out << ',' << v;
        out << ',' << (samples.empty_flags[s] ? 1 : 0) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

PosteriorSamples load_samples(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open samples: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header", 1);
    const auto header = split(trim(line), ',');
    // header: state, K mu, K sigma2, K w, K n, empty
    if (header.size() < 6 || (header.size() - 2) % 4 != 0)
        throw ParseError("unexpected column count in header", 1);
    const int k = static_cast<int>((header.size() - 2) / 4);

    PosteriorSamples samples;
    samples.k = k;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto toks = split(t, ',');
        if (toks.size() != header.size())
            throw ParseError("unexpected column count", line_no);
        std::size_t c = 1;
        std::vector<double> mu(k), sigma2(k), w(k);
        std::vector<long> counts(k);
        for (int i = 0; i < k; ++i) mu[i] = parse_double(toks[c++], line_no);
        for (int i = 0; i < k; ++i) sigma2[i] = parse_double(toks[c++], line_no);
        for (int i = 0; i < k; ++i) w[i] = parse_double(toks[c++], line_no);
        for (int i = 0; i < k; ++i) counts[i] = parse_long(toks[c++], line_no);
        const long empty = parse_long(toks[c], line_no);
        samples.mu.push_back(std::move(mu));
        samples.sigma2.push_back(std::move(sigma2));
        samples.weights.push_back(std::move(w));
        samples.counts.push_back(std::move(counts));
        samples.empty_flags.push_back(empty ? 1 : 0);
    }
    return samples;
}

void save_allocations(const PosteriorSamples& samples,
                      const std::filesystem::path& path) {
    if (samples.allocations.empty())
        throw std::invalid_argument(
            "no saved allocations (run with keep_allocations)");
    auto out = open_out(path);
    for (const auto& row : samples.allocations) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << row[j] + 1;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<std::vector<int>> load_allocations(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open allocations: " + path.string());
    std::vector<std::vector<int>> rows;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        std::vector<int> row;
        std::stringstream ss(t);
        std::string tok;
        while (ss >> tok)
            row.push_back(static_cast<int>(parse_long(tok, line_no)) - 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

void save_histogram(const HistogramSummary& hist,
                    const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "bin_left,bin_right,count,density\n";
    for (std::size_t b = 0; b < hist.bin_counts.size(); ++b) {
        out << format_double(hist.bin_edges[b]) << ','
            << format_double(hist.bin_edges[b + 1]) << ',' << hist.bin_counts[b]
            << ',' << format_double(hist.normalized_density[b]) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace gmix
