#pragma once

#include <cassert>
#include <vector>

#include "gmix/dataset.hpp"

namespace gmix {

// Per-component sufficient statistics.
struct CompStats {
    long n = 0;
    double sum_x = 0.0;
    double sum_x2 = 0.0;
};

// Allocation vector with incrementally maintained per-component counts and
// sums. Call recompute() once per sweep to bound floating-point drift.
struct AllocationState {
    std::vector<int> labels;     // size N, entries in [0, k)
    std::vector<long> counts;    // size k
    std::vector<double> sum_x;   // size k
    std::vector<double> sum_x2;  // size k

    AllocationState() = default;

    AllocationState(std::vector<int> g, const Dataset& data, int k)
        : labels(std::move(g)),
          counts(k, 0),
          sum_x(k, 0.0),
          sum_x2(k, 0.0) {
        recompute(data);
    }

    int k() const { return static_cast<int>(counts.size()); }
    long n() const { return static_cast<long>(labels.size()); }

    CompStats stats(int i) const { return {counts[i], sum_x[i], sum_x2[i]}; }

    // Within-component variance V_i = E[x^2] - E[x]^2 (requires counts[i] > 0).
    double variance(int i) const {
        const double inv = 1.0 / static_cast<double>(counts[i]);
        const double m = sum_x[i] * inv;
        return sum_x2[i] * inv - m * m;
    }

    void remove_point(long j, double x) {
        const int c = labels[j];
        --counts[c];
        sum_x[c] -= x;
        sum_x2[c] -= x * x;
    }

    void insert_point(long j, double x, int c) {
        labels[j] = c;
        ++counts[c];
        sum_x[c] += x;
        sum_x2[c] += x * x;
    }

    void recompute(const Dataset& data) {
        std::fill(counts.begin(), counts.end(), 0);
        std::fill(sum_x.begin(), sum_x.end(), 0.0);
        std::fill(sum_x2.begin(), sum_x2.end(), 0.0);
        for (long j = 0; j < n(); ++j) {
            const int c = labels[j];
            const double x = data.values[j];
            ++counts[c];
            sum_x[c] += x;
            sum_x2[c] += x * x;
        }
    }
};

inline CompStats operator+(CompStats s, double x) {
    return {s.n + 1, s.sum_x + x, s.sum_x2 + x * x};
}

}  // namespace gmix
