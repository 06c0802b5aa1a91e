// gmix: command-line front end for the mixture sampling library.
//
// Subcommands: fit, sweep, oracle, lemma1, replay. Every run writes a
// manifest.json describing the resolved configuration and the digests of its
// outputs; `gmix replay` re-executes a manifest and reproduces the outputs
// byte for byte.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "gmix/dataset.hpp"
#include "gmix/diagnostics.hpp"
#include "gmix/errors.hpp"
#include "gmix/io.hpp"
#include "gmix/model.hpp"
#include "gmix/oracle.hpp"
#include "gmix/random.hpp"
#include "gmix/samplers.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gmix;

namespace {

int dispatch(const std::vector<std::string>& args);

struct ModelOpts {
    std::string model;
    int k = 1;
    double alpha = 0.0, beta = 0.0, kappa = 0.0, g = 0.0, h = 0.0;
    bool has_alpha = false, has_beta = false, has_kappa = false,
         has_g = false, has_h = false;
    std::vector<double> delta;
    int min_count = 2;
};

void add_model_flags(CLI::App* cmd, ModelOpts& m, bool modified_allowed) {
    // --h is a hyperparameter here, so help is long-form only.
    cmd->set_help_flag("--help", "print this help message and exit");
    auto models = modified_allowed
                      ? std::vector<std::string>{"standard-nig", "standard-rg",
                                                 "modified-jeffreys"}
                      : std::vector<std::string>{"standard-nig", "standard-rg"};
    cmd->add_option("--model", m.model, "prior family")
        ->required()
        ->check(CLI::IsMember(models));
    cmd->add_option("--k", m.k, "number of mixture components")->required();
    cmd->add_option("--alpha", m.alpha,
                    "inverse-gamma shape (reference runs: 0.1/0.05/0.01 for "
                    "standard-nig, 2 for standard-rg)")
        ->each([&m](const std::string&) { m.has_alpha = true; });
    cmd->add_option("--beta", m.beta, "inverse-gamma scale (standard-nig)")
        ->each([&m](const std::string&) { m.has_beta = true; });
    cmd->add_option("--kappa", m.kappa, "prior mean precision factor")
        ->each([&m](const std::string&) { m.has_kappa = true; });
    cmd->add_option("--g", m.g,
                    "hierarchical rate shape (standard-rg; reference runs "
                    "use 0.2)")
        ->each([&m](const std::string&) { m.has_g = true; });
    cmd->add_option("--h", m.h,
                    "rate of the hierarchical Gamma prior (standard-rg; "
                    "reference runs keep h = 10*kappa)")
        ->each([&m](const std::string&) { m.has_h = true; });
    cmd->add_option("--delta", m.delta,
                    "Dirichlet weights, one per component (default: all 1)");
    cmd->add_option("--min-count", m.min_count,
                    "minimum points per component (modified-jeffreys)");
}

ModelSpec make_model(const ModelOpts& m) {
    if (m.model == "standard-nig") {
        if (!(m.has_alpha && m.has_beta && m.has_kappa))
            throw std::invalid_argument(
                "standard-nig requires --alpha, --beta and --kappa");
        return ModelSpec::standard_nig(m.k, {m.alpha, m.beta, m.kappa},
                                       m.delta);
    }
    if (m.model == "standard-rg") {
        if (!(m.has_alpha && m.has_g && m.has_h && m.has_kappa))
            throw std::invalid_argument(
                "standard-rg requires --alpha, --g, --h and --kappa");
        return ModelSpec::standard_rg(m.k, {m.alpha, m.g, m.h, m.kappa},
                                      m.delta);
    }
    return ModelSpec::modified_jeffreys(m.k, m.delta, m.min_count);
}

json model_json(const ModelOpts& m) {
    json j;
    j["model"] = m.model;
    j["k"] = m.k;
    if (m.model == "standard-nig") {
        j["alpha"] = m.alpha;
        j["beta"] = m.beta;
        j["kappa"] = m.kappa;
    } else if (m.model == "standard-rg") {
        j["alpha"] = m.alpha;
        j["g"] = m.g;
        j["h"] = m.h;
        j["kappa"] = m.kappa;
    } else {
        j["min_count"] = m.min_count;
    }
    if (!m.delta.empty()) j["delta"] = m.delta;
    return j;
}

struct ChainOpts {
    std::string sampler = "collapsed";
    long burnin = 10'000;
    long samples = 100'000;
    long thin = 10;
    std::uint64_t seed = 1;
    double mu_step = 0.0, sigma_step = 0.0, mu_min = 0.0, mu_max = 0.0,
           sigma_min = 0.0;
    bool has_mu_step = false, has_sigma_step = false, has_mu_min = false,
         has_mu_max = false, has_sigma_min = false;
};

void add_chain_flags(CLI::App* cmd, ChainOpts& c) {
    cmd->add_option("--sampler", c.sampler, "MCMC backend")
        ->check(CLI::IsMember({"gibbs", "collapsed", "mh"}));
    cmd->add_option("--burnin", c.burnin, "discarded initial sweeps");
    cmd->add_option("--samples", c.samples, "post-burn-in sweeps");
    cmd->add_option("--thin", c.thin, "keep every thin-th state");
    cmd->add_option("--seed", c.seed, "RNG seed");
    cmd->add_option("--mu-step", c.mu_step, "MH mean proposal std")
        ->each([&c](const std::string&) { c.has_mu_step = true; });
    cmd->add_option("--sigma-step", c.sigma_step, "MH scale proposal std")
        ->each([&c](const std::string&) { c.has_sigma_step = true; });
    cmd->add_option("--mu-min", c.mu_min, "lower mean bound (MH)")
        ->each([&c](const std::string&) { c.has_mu_min = true; });
    cmd->add_option("--mu-max", c.mu_max, "upper mean bound (MH)")
        ->each([&c](const std::string&) { c.has_mu_max = true; });
    cmd->add_option("--sigma-min", c.sigma_min, "lower scale bound (MH)")
        ->each([&c](const std::string&) { c.has_sigma_min = true; });
}

SamplerKind sampler_kind(const std::string& name) {
    if (name == "gibbs") return SamplerKind::DaGibbs;
    if (name == "collapsed") return SamplerKind::CollapsedGibbs;
    return SamplerKind::MetropolisHastings;
}

ChainConfig make_chain_config(const ChainOpts& c, const Dataset& data,
                              bool keep_allocations) {
    ChainConfig cfg;
    cfg.sampler = sampler_kind(c.sampler);
    cfg.burn_in = c.burnin;
    cfg.post_burn_in = c.samples;
    cfg.thin = c.thin;
    cfg.seed = c.seed;
    cfg.keep_allocations = keep_allocations;
    cfg.set_proposal_defaults(data);
    if (c.has_mu_step) cfg.mu_step = c.mu_step;
    if (c.has_sigma_step) cfg.sigma_step = c.sigma_step;
    if (c.has_mu_min) cfg.mu_min = c.mu_min;
    if (c.has_mu_max) cfg.mu_max = c.mu_max;
    if (c.has_sigma_min) cfg.sigma_min = c.sigma_min;
    cfg.validate();
    return cfg;
}

json chain_json(const ChainConfig& cfg) {
    json j;
    j["sampler"] = cfg.sampler == SamplerKind::DaGibbs ? "gibbs"
                   : cfg.sampler == SamplerKind::CollapsedGibbs
                       ? "collapsed"
                       : "mh";
    j["burnin"] = cfg.burn_in;
    j["samples"] = cfg.post_burn_in;
    j["thin"] = cfg.thin;
    j["seed"] = cfg.seed;
    if (cfg.sampler == SamplerKind::MetropolisHastings) {
        j["mu_step"] = cfg.mu_step;
        j["sigma_step"] = cfg.sigma_step;
        j["mu_min"] = cfg.mu_min;
        j["mu_max"] = cfg.mu_max;
        j["sigma_min"] = cfg.sigma_min;
    }
    return j;
}

std::vector<double> mu_column(const PosteriorSamples& s, int i) {
    std::vector<double> out;
    out.reserve(s.mu.size());
    for (const auto& row : s.mu) out.push_back(row[i]);
    return out;
}

void write_manifest(const fs::path& out_dir, const std::string& command,
                    const std::vector<std::string>& args, json config,
                    const std::string& data_digest,
                    const std::vector<std::string>& output_names) {
    json manifest;
    manifest["command"] = command;
    manifest["argv"] = args;
    manifest["config"] = std::move(config);
    if (!data_digest.empty()) manifest["data_digest"] = data_digest;
    json outputs = json::object();
    for (const auto& name : output_names)
        outputs[name] = file_digest(out_dir / name);
    manifest["outputs"] = outputs;
    std::ofstream out(out_dir / "manifest.json");
    out << manifest.dump(2) << '\n';
    if (!out)
        throw std::runtime_error("cannot write manifest in " +
                                 out_dir.string());
}

// ---------------------------------------------------------------------------

struct FitOpts {
    std::string data;
    ModelOpts model;
    ChainOpts chain;
    bool center = false;
    bool save_alloc = false;
    std::string out = "gmix-out";
};

int run_fit(const FitOpts& opts, const std::vector<std::string>& args) {
    Dataset data = load_dataset(opts.data);
    const std::string digest = file_digest(opts.data);
    if (opts.center) data.center();

    const ModelSpec spec = make_model(opts.model);
    const ChainConfig cfg = make_chain_config(opts.chain, data, opts.save_alloc);
    const PosteriorSamples samples = run_chain(data, spec, cfg);

    fs::create_directories(opts.out);
    const fs::path out_dir(opts.out);
    std::vector<std::string> outputs;

    save_samples(samples, out_dir / "samples.csv");
    outputs.push_back("samples.csv");
    if (opts.save_alloc) {
        save_allocations(samples, out_dir / "allocations.txt");
        outputs.push_back("allocations.txt");
    }
    for (int i = 0; i < samples.k; ++i) {
        const std::string mu_name = "mu_hist_" + std::to_string(i + 1) + ".csv";
        save_histogram(histogram(mu_column(samples, i)), out_dir / mu_name);
        outputs.push_back(mu_name);
        const std::string n_name = "n_hist_" + std::to_string(i + 1) + ".csv";
        save_histogram(count_posterior_summary(samples, i), out_dir / n_name);
        outputs.push_back(n_name);
    }
    save_histogram(histogram(pooled_mu_draws(samples)),
                   out_dir / "mu_hist_pooled.csv");
    outputs.push_back("mu_hist_pooled.csv");

    {
        std::ofstream diag(out_dir / "diagnostics.txt");
        diag << "n_data=" << data.n() << '\n';
        diag << "saved_states=" << samples.n_saved() << '\n';
        diag << "empty_fraction=" << format_double(empty_component_fraction(samples))
             << '\n';
        for (int i = 0; i < samples.k; ++i)
            for (int j = i + 1; j < samples.k; ++j)
                diag << "mode_symmetry_" << i + 1 << '_' << j + 1 << '='
                     << format_double(mode_symmetry_score(samples, i, j))
                     << '\n';
        if (!diag)
            throw std::runtime_error("cannot write diagnostics report");
    }
    outputs.push_back("diagnostics.txt");

    json config;
    config["data"] = opts.data;
    config["center"] = opts.center;
    config["model"] = model_json(opts.model);
    config["chain"] = chain_json(cfg);
    write_manifest(out_dir, "fit", args, std::move(config), digest, outputs);
    std::cout << "wrote " << outputs.size() << " outputs to " << opts.out
              << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct SweepOpts {
    std::string data;
    ModelOpts model;
    ChainOpts chain;
    std::vector<double> grid;
    bool center = false;
    std::string out = "gmix-out";
};

int run_sweep(const SweepOpts& opts, const std::vector<std::string>& args) {
    if (opts.grid.empty())
        throw std::invalid_argument("--grid requires at least one value");
    if (opts.model.model == "modified-jeffreys")
        throw std::invalid_argument(
            "sweep varies the standard priors' hyperparameters");

    Dataset data = load_dataset(opts.data);
    const std::string digest = file_digest(opts.data);
    if (opts.center) data.center();
    const bool is_rg = opts.model.model == "standard-rg";

    fs::create_directories(opts.out);
    const fs::path out_dir(opts.out);
    std::ofstream table(out_dir / "sweep.csv");
    table << (is_rg ? "index,alpha,g,h,kappa,empty_fraction\n"
                    : "index,alpha,beta,kappa,empty_fraction\n");

    for (std::size_t idx = 0; idx < opts.grid.size(); ++idx) {
        const double v = opts.grid[idx];
        ModelOpts m = opts.model;
        m.has_alpha = m.has_beta = m.has_kappa = m.has_g = m.has_h = true;
        if (is_rg) {
            // Grid value is kappa; the rate hyperparameter tracks it 10:1
            // unless given explicitly. alpha and g keep their flag values.
            m.kappa = v;
            if (!opts.model.has_h) m.h = 10.0 * v;
            if (!opts.model.has_alpha)
                throw std::invalid_argument("standard-rg sweep needs --alpha");
            if (!opts.model.has_g)
                throw std::invalid_argument("standard-rg sweep needs --g");
        } else {
            // Grid value sets alpha = beta = kappa jointly unless a
            // hyperparameter is pinned by its flag.
            m.alpha = opts.model.has_alpha ? opts.model.alpha : v;
            m.beta = opts.model.has_beta ? opts.model.beta : v;
            m.kappa = opts.model.has_kappa ? opts.model.kappa : v;
        }
        const ModelSpec spec = make_model(m);

        ChainOpts chain = opts.chain;
        chain.seed = derive_seed(opts.chain.seed, idx);
        const ChainConfig cfg = make_chain_config(chain, data, false);
        const PosteriorSamples samples = run_chain(data, spec, cfg);
        const double frac = empty_component_fraction(samples);

        table << idx << ',' << format_double(m.alpha) << ',';
        if (is_rg)
            table << format_double(m.g) << ',' << format_double(m.h) << ',';
        else
            table << format_double(m.beta) << ',';
        table << format_double(m.kappa) << ',' << format_double(frac) << '\n';
    }
    if (!table) throw std::runtime_error("cannot write sweep table");
    table.close();

    json config;
    config["data"] = opts.data;
    config["center"] = opts.center;
    config["model"] = model_json(opts.model);
    config["grid"] = opts.grid;
    config["chain"]["sampler"] = opts.chain.sampler;
    config["chain"]["burnin"] = opts.chain.burnin;
    config["chain"]["samples"] = opts.chain.samples;
    config["chain"]["thin"] = opts.chain.thin;
    config["chain"]["seed"] = opts.chain.seed;
    write_manifest(out_dir, "sweep", args, std::move(config), digest,
                   {"sweep.csv"});
    std::cout << "wrote sweep.csv (" << opts.grid.size() << " grid points) to "
              << opts.out << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct OracleOpts {
    std::string data;
    ModelOpts model;
    std::string chain_alloc;
    bool center = false;
    std::string out = "gmix-out";
};

int run_oracle(const OracleOpts& opts, const std::vector<std::string>& args) {
    Dataset data = load_dataset(opts.data);
    const std::string digest = file_digest(opts.data);
    if (opts.center) data.center();
    const ModelSpec spec = make_model(opts.model);
    const EnumeratedPosterior post = oracle_enumerate(data, spec);

    fs::create_directories(opts.out);
    const fs::path out_dir(opts.out);
    std::vector<std::string> outputs;

    {
        std::ofstream table(out_dir / "oracle.csv");
        table << "allocation,log_weight,probability\n";
        for (std::size_t i = 0; i < post.allocations.size(); ++i) {
            for (std::size_t j = 0; j < post.allocations[i].size(); ++j)
                table << (j ? " " : "") << post.allocations[i][j] + 1;
            table << ',' << format_double(post.log_weights[i]) << ','
                  << format_double(post.normalized[i]) << '\n';
        }
        if (!table) throw std::runtime_error("cannot write oracle table");
    }
    outputs.push_back("oracle.csv");

    if (!opts.chain_alloc.empty()) {
        const auto chain = load_allocations(opts.chain_alloc);
        if (chain.empty())
            throw std::runtime_error("chain allocation file is empty");
        std::map<std::vector<int>, double> exact;
        for (std::size_t i = 0; i < post.allocations.size(); ++i)
            exact[post.allocations[i]] = post.normalized[i];
        std::map<std::vector<int>, double> observed;
        const double inv = 1.0 / static_cast<double>(chain.size());
        for (const auto& labels : chain) observed[labels] += inv;
        double tv = 0.0;
        for (const auto& [g, p] : exact) {
            const auto it = observed.find(g);
            tv += std::abs(p - (it == observed.end() ? 0.0 : it->second));
        }
        for (const auto& [g, p] : observed)
            if (!exact.count(g)) tv += p;
        tv *= 0.5;

        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", tv);
        std::ofstream report(out_dir / "oracle_report.txt");
        report << "tv=" << buf << '\n';
        if (!report) throw std::runtime_error("cannot write oracle report");
        outputs.push_back("oracle_report.txt");
        std::cout << "tv=" << buf << '\n';
    }

    json config;
    config["data"] = opts.data;
    config["center"] = opts.center;
    config["model"] = model_json(opts.model);
    if (!opts.chain_alloc.empty()) config["chain_alloc"] = opts.chain_alloc;
    write_manifest(out_dir, "oracle", args, std::move(config), digest,
                   outputs);
    return 0;
}

// ---------------------------------------------------------------------------

struct Lemma1Opts {
    std::string data;
    double c1 = 1.0, c2 = 1.0;
    std::vector<double> grid{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
    long split = 1;  // trailing points assigned to component 2 in G''
    bool center = false;
    std::string out = "gmix-out";
};

int run_lemma1(const Lemma1Opts& opts, const std::vector<std::string>& args) {
    Dataset data = load_dataset(opts.data);
    const std::string digest = file_digest(opts.data);
    if (opts.center) data.center();
    const long n = data.n();
    if (opts.split < 1 || opts.split >= n)
        throw std::invalid_argument("--split must be in [1, N-1]");

    Lemma1SweepConfig cfg;
    cfg.c1 = opts.c1;
    cfg.c2 = opts.c2;
    cfg.kappa_grid = opts.grid;
    cfg.g_prime.assign(n, 0);
    cfg.g_double_prime.assign(n, 0);
    for (long j = n - opts.split; j < n; ++j) cfg.g_double_prime[j] = 1;
    const auto rows = lemma1_ratio_sweep(data, cfg);

    fs::create_directories(opts.out);
    const fs::path out_dir(opts.out);
    {
        std::ofstream table(out_dir / "lemma1.csv");
        table << "kappa,log_ratio,slope\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            table << format_double(rows[i].kappa) << ','
                  << format_double(rows[i].log_ratio) << ',';
            if (i > 0) {
                const double slope =
                    (rows[i].log_ratio - rows[i - 1].log_ratio) /
                    (std::log(rows[i].kappa) - std::log(rows[i - 1].kappa));
                table << format_double(slope);
            }
            table << '\n';
        }
        if (!table) throw std::runtime_error("cannot write ratio table");
    }

    json config;
    config["data"] = opts.data;
    config["center"] = opts.center;
    config["c1"] = opts.c1;
    config["c2"] = opts.c2;
    config["grid"] = opts.grid;
    config["split"] = opts.split;
    write_manifest(out_dir, "lemma1", args, std::move(config), digest,
                   {"lemma1.csv"});
    std::cout << "wrote lemma1.csv (" << rows.size() << " rows) to "
              << opts.out << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct ReplayOpts {
    std::string manifest;
    std::string out;
};

int run_replay(const ReplayOpts& opts) {
    std::ifstream in(opts.manifest);
    if (!in)
        throw std::runtime_error("cannot open manifest: " + opts.manifest);
    json manifest;
    in >> manifest;
    std::vector<std::string> args =
        manifest.at("argv").get<std::vector<std::string>>();
    if (!opts.out.empty()) {
        bool replaced = false;
        for (std::size_t i = 0; i + 1 < args.size(); ++i)
            if (args[i] == "--out") {
                args[i + 1] = opts.out;
                replaced = true;
            }
        if (!replaced) {
            args.push_back("--out");
            args.push_back(opts.out);
        }
    }
    return dispatch(args);
}

// ---------------------------------------------------------------------------

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"Gaussian mixture posterior sampling toolkit"};
    app.require_subcommand(1);

    FitOpts fit;
    auto* fit_cmd = app.add_subcommand(
        "fit", "run one MCMC chain and write samples plus summaries");
    fit_cmd->add_option("--data", fit.data, "dataset file, one value per line")
        ->required();
    add_model_flags(fit_cmd, fit.model, true);
    add_chain_flags(fit_cmd, fit.chain);
    fit_cmd->add_flag("--center", fit.center, "subtract the sample mean");
    fit_cmd->add_flag("--save-alloc", fit.save_alloc,
                      "also write saved allocation vectors");
    fit_cmd->add_option("--out", fit.out, "output directory");

    SweepOpts sweep;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "run fits over a hyperparameter grid, tabulating the "
                 "empty-component fraction");
    sweep_cmd->add_option("--data", sweep.data, "dataset file")->required();
    add_model_flags(sweep_cmd, sweep.model, false);
    add_chain_flags(sweep_cmd, sweep.chain);
    sweep_cmd
        ->add_option("--grid", sweep.grid,
                     "grid values: alpha=beta=kappa for standard-nig, kappa "
                     "(with h = 10*kappa) for standard-rg")
        ->required();
    sweep_cmd->add_flag("--center", sweep.center, "subtract the sample mean");
    sweep_cmd->add_option("--out", sweep.out, "output directory");

    OracleOpts oracle;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "enumerate the exact allocation posterior on a small "
                  "instance");
    oracle_cmd->add_option("--data", oracle.data, "dataset file")->required();
    add_model_flags(oracle_cmd, oracle.model, true);
    oracle_cmd->add_option("--chain-alloc", oracle.chain_alloc,
                           "allocation file from `fit --save-alloc`; reports "
                           "the TV distance to the exact posterior");
    oracle_cmd->add_flag("--center", oracle.center,
                         "subtract the sample mean");
    oracle_cmd->add_option("--out", oracle.out, "output directory");

    Lemma1Opts lemma1;
    auto* lemma1_cmd = app.add_subcommand(
        "lemma1", "posterior log-ratio sweep with alpha = c1*kappa, "
                  "beta = c2*kappa along a decreasing kappa grid");
    lemma1_cmd->add_option("--data", lemma1.data, "dataset file")->required();
    lemma1_cmd->add_option("--c1", lemma1.c1, "alpha = c1 * kappa");
    lemma1_cmd->add_option("--c2", lemma1.c2, "beta = c2 * kappa");
    lemma1_cmd->add_option("--grid", lemma1.grid,
                           "strictly decreasing kappa grid");
    lemma1_cmd->add_option(
        "--split", lemma1.split,
        "points in the second component of the comparison allocation");
    lemma1_cmd->add_flag("--center", lemma1.center,
                         "subtract the sample mean");
    lemma1_cmd->add_option("--out", lemma1.out, "output directory");

    ReplayOpts replay;
    auto* replay_cmd = app.add_subcommand(
        "replay", "re-execute a recorded manifest, reproducing its outputs");
    replay_cmd->add_option("--manifest", replay.manifest, "manifest.json path")
        ->required();
    replay_cmd->add_option("--out", replay.out,
                           "redirect outputs to a different directory");

    std::vector<const char*> argv;
    argv.push_back("gmix");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fit_cmd->parsed()) return run_fit(fit, args);
        if (sweep_cmd->parsed()) return run_sweep(sweep, args);
        if (oracle_cmd->parsed()) return run_oracle(oracle, args);
        if (lemma1_cmd->parsed()) return run_lemma1(lemma1, args);
        return run_replay(replay);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    return dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
