#include "gmix/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "gmix/random.hpp"

namespace gmix {

void SyntheticSpec::validate() const {
    if (weights.empty() || weights.size() != means.size() ||
        weights.size() != variances.size())
        throw std::invalid_argument("weights/means/variances size mismatch");
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("weights must sum to 1");
    for (double v : variances)
        if (!(v > 0.0)) throw std::invalid_argument("variances must be positive");
    if (n < 1) throw std::invalid_argument("sample count must be >= 1");
}

LabeledSample sample_mixture(const SyntheticSpec& spec) {
    spec.validate();
    RngStream rng(spec.seed);
    const int k = static_cast<int>(spec.weights.size());

    std::vector<double> cum(k);
    double acc = 0.0;
    for (int i = 0; i < k; ++i) {
        acc += spec.weights[i];
        cum[i] = acc;
    }

    LabeledSample out;
    out.data.values.resize(spec.n);
    out.labels.resize(spec.n);
    for (long j = 0; j < spec.n; ++j) {
        const double u = rng.uniform();
        int c = 0;
        while (c < k - 1 && u > cum[c]) ++c;
        out.labels[j] = c;
        out.data.values[j] =
            rng.normal(spec.means[c], std::sqrt(spec.variances[c]));
    }
    return out;
}

}  // namespace gmix
