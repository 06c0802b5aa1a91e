#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace gmix {

// Conjugate normal-inverse-gamma prior on each (mu_i, sigma_i^2):
//   mu | sigma^2 ~ Normal(0, sigma^2 / kappa),  sigma^2 ~ InvGamma(alpha, beta)
struct NigPrior {
    double alpha;
    double beta;
    double kappa;
};

// Hierarchical prior: mu ~ Normal(0, 1/kappa), sigma^2 | b ~ InvGamma(alpha, b),
// b ~ Gamma(g, rate h).
struct RgPrior {
    double alpha;
    double g;
    double h;
    double kappa;
};

// Independent improper priors proportional to 1/sigma per component.
struct JeffreysPrior {};

using PriorFamily = std::variant<NigPrior, RgPrior, JeffreysPrior>;

struct ModelSpec {
    int k = 1;
    PriorFamily prior;
    std::vector<double> delta;  // Dirichlet weights, size k
    int min_count = 0;

    static ModelSpec standard_nig(int k, NigPrior p,
                                  std::vector<double> delta = {}) {
        ModelSpec s;
        s.k = k;
        s.prior = p;
        s.delta = delta.empty() ? std::vector<double>(k, 1.0) : std::move(delta);
        s.min_count = 0;
        s.validate();
        return s;
    }

    static ModelSpec standard_rg(int k, RgPrior p,
                                 std::vector<double> delta = {}) {
        ModelSpec s;
        s.k = k;
        s.prior = p;
        s.delta = delta.empty() ? std::vector<double>(k, 1.0) : std::move(delta);
        s.min_count = 0;
        s.validate();
        return s;
    }

    static ModelSpec modified_jeffreys(int k, std::vector<double> delta = {},
                                       int min_count = 2) {
        ModelSpec s;
        s.k = k;
        s.prior = JeffreysPrior{};
        s.delta = delta.empty() ? std::vector<double>(k, 1.0) : std::move(delta);
        s.min_count = min_count;
        s.validate();
        return s;
    }

    bool is_modified() const {
        return std::holds_alternative<JeffreysPrior>(prior);
    }

    void validate() const {
        if (k < 1) throw std::invalid_argument("component count must be >= 1");
        if (delta.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("delta must have one weight per component");
        for (double d : delta)
            if (!(d > 0.0))
                throw std::invalid_argument("delta weights must be positive");
        if (const auto* p = std::get_if<NigPrior>(&prior)) {
            if (!(p->alpha > 0.0 && p->beta > 0.0 && p->kappa > 0.0))
                throw std::invalid_argument("NIG hyperparameters must be positive");
            if (min_count != 0)
                throw std::invalid_argument("standard priors require min_count = 0");
        } else if (const auto* p2 = std::get_if<RgPrior>(&prior)) {
            if (!(p2->alpha > 0.0 && p2->g > 0.0 && p2->h > 0.0 &&
                  p2->kappa > 0.0))
                throw std::invalid_argument("RG hyperparameters must be positive");
            if (min_count != 0)
                throw std::invalid_argument("standard priors require min_count = 0");
        } else {
            if (min_count < 2)
                throw std::invalid_argument(
                    "Jeffreys prior requires min_count >= 2");
        }
    }
};

struct ComponentParams {
    std::vector<double> mu;
    std::vector<double> sigma;  // standard-deviation scale, all > 0
    std::optional<std::vector<double>> p;
    std::optional<double> beta_hyper;

    int k() const { return static_cast<int>(mu.size()); }

    void validate() const {
        if (mu.size() != sigma.size())
            throw std::invalid_argument("mu/sigma size mismatch");
        for (double s : sigma)
            if (!(s > 0.0)) throw std::invalid_argument("sigma must be positive");
        if (p) {
            double total = 0.0;
            for (double w : *p) {
                if (!(w > 0.0))
                    throw std::invalid_argument("weights must be positive");
                total += w;
            }
            if (std::abs(total - 1.0) > 1e-12)
                throw std::invalid_argument("weights must sum to 1");
        }
    }
};

}  // namespace gmix
