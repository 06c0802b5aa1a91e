#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmix {

struct Dataset {
    std::vector<double> values;

    Dataset() = default;
    explicit Dataset(std::vector<double> v) : values(std::move(v)) {
        validate();
    }

    long n() const { return static_cast<long>(values.size()); }

    double mean() const {
        return std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
    }

    // Population standard deviation (1/n normalization).
    double stddev() const {
        const double m = mean();
        double s = 0.0;
        for (double x : values) s += (x - m) * (x - m);
        return std::sqrt(s / static_cast<double>(values.size()));
    }

    double min() const {
        return *std::min_element(values.begin(), values.end());
    }
    double max() const {
        return *std::max_element(values.begin(), values.end());
    }

    void center() {
        const double m = mean();
        for (double& x : values) x -= m;
    }

    void validate() const {
        if (values.empty())
            throw std::invalid_argument("dataset must contain at least one point");
        for (double x : values)
            if (!std::isfinite(x))
                throw std::invalid_argument("dataset contains a non-finite value");
    }
};

}  // namespace gmix
