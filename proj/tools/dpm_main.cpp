#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dpm/baselines.hpp"
#include "dpm/datasets.hpp"
#include "dpm/experiment.hpp"
#include "dpm/numeric.hpp"
#include "dpm/oracles.hpp"
#include "dpm/power.hpp"
#include "dpm/predictors.hpp"
#include "dpm/rng.hpp"
#include "dpm/ski_rental.hpp"
#include "toml_lite.hpp"

namespace {

std::vector<double> grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (double v = lo; v <= hi + 1e-12; v += step) g.push_back(std::min(v, hi));
    if (g.empty() || g.back() < hi) g.push_back(hi);
    return g;
}

dpm::ExperimentConfig config_from_toml(const dpm::toml::Table& t) {
    dpm::ExperimentConfig cfg;
    cfg.dataset = t.get_str("dataset.name", cfg.dataset);
    cfg.periods = static_cast<std::size_t>(t.get_num("dataset.periods", 10000));
    cfg.system = t.get_str("system.name", cfg.system);
    if (t.has("experiment.sigmas")) cfg.sigmas = t.get_nums("experiment.sigmas");
    if (t.has("experiment.algorithms"))
        cfg.algorithms = t.get_strs("experiment.algorithms");
    if (t.has("experiment.rho_grid"))
        cfg.rho_grid = t.get_nums("experiment.rho_grid");
    if (t.has("experiment.adjkr_extra"))
        cfg.adjkr_extra = t.get_nums("experiment.adjkr_extra");
    cfg.eps1 = t.get_num("experiment.eps1", cfg.eps1);
    cfg.eps_bound = t.get_num("experiment.eps_bound", cfg.eps_bound);
    cfg.share_rate = t.get_num("experiment.share_rate", cfg.share_rate);
    cfg.repeats = static_cast<int>(t.get_num("experiment.repeats", cfg.repeats));
    cfg.prudent = t.get_bool("experiment.prudent", cfg.prudent);
    cfg.seed = static_cast<std::uint64_t>(t.get_num("experiment.seed", 1));
    return cfg;
}

dpm::IdleDataset trace_dataset(const dpm::toml::Table& t, std::uint64_t seed) {
    dpm::TraceFormat fmt;
    const std::string delim = t.get_str("dataset.delimiter", ",");
    fmt.delimiter = delim.empty() ? ',' : delim[0];
    fmt.column = static_cast<std::size_t>(t.get_num("dataset.column", 0));
    fmt.unit = t.get_num("dataset.unit", 1.0);
    auto ts = dpm::load_trace(t.get_str("dataset.path"), fmt);
    dpm::IdleDataset ds;
    ds.lengths = dpm::rescale(dpm::extract_idle(ts),
                              t.get_num("dataset.target_mean", 2.0));
    ds.source = t.get_str("dataset.path");
    ds.seed = seed;
    return ds;
}

int cmd_gen(const std::string& config, std::uint64_t seed, std::string out) {
    const auto t = dpm::toml::load(config);
    dpm::IdleDataset ds;
    const std::string name = t.get_str("dataset.name", "psk4");
    const auto n = static_cast<std::size_t>(t.get_num("dataset.periods", 10000));
    if (name == "psk4" || name == "psk8") {
        ds = dpm::gen_uniform(n, name == "psk4" ? 4.0 : 8.0,
                              dpm::hash_str(seed, name));
        ds.source = name;
        ds.seed = seed;
    } else if (name == "trace") {
        ds = trace_dataset(t, seed);
    } else {
        throw std::runtime_error("config: unknown dataset " + name);
    }
    if (t.has("dataset.sigma")) {
        const double sigma = t.get_num("dataset.sigma", 0.0);
        dpm::Rng rng(dpm::hash_str(seed, "gen-pred"));
        ds.predictions.reserve(ds.lengths.size());
        for (double l : ds.lengths)
            ds.predictions.push_back(dpm::noisy_prediction(l, sigma, rng.normal()));
    }
    if (out.empty()) out = name + ".jsonl";
    dpm::save_dataset(ds, out);
    std::printf("wrote %zu periods to %s\n", ds.lengths.size(), out.c_str());
    return 0;
}

int cmd_sweep(const std::string& config, std::uint64_t seed, bool no_prudent,
              int parallel, const std::string& out, bool print_summary) {
    const auto t = dpm::toml::load(config);
    auto cfg = config_from_toml(t);
    if (seed != 0) cfg.seed = seed;
    if (no_prudent) cfg.prudent = false;
    cfg.parallel = parallel;
    dpm::IdleDataset ds;
    if (cfg.dataset == "trace") {
        ds = trace_dataset(t, cfg.seed);
        if (cfg.periods > 0 && ds.lengths.size() > cfg.periods)
            ds.lengths.resize(cfg.periods);
    } else {
        ds = dpm::make_dataset(cfg);
    }
    const auto cells = dpm::run_sweep(cfg, ds);
    if (!out.empty()) dpm::write_csv(out, cfg, cells);
    if (print_summary) {
        std::printf("%-16s %8s %12s %10s\n", "algorithm", "sigma", "mean_ratio",
                    "std");
        for (const auto& s : dpm::summarize(cells))
            std::printf("%-16s %8.3g %12.5f %10.5f\n", s.algorithm.c_str(),
                        s.sigma, s.mean_ratio, s.std_ratio);
    }
    return 0;
}

int cmd_report(const std::string& in) {
    std::ifstream f(in);
    if (!f) throw std::runtime_error("report: cannot open " + in);
    std::string line;
    std::vector<dpm::CellResult> cells;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("dataset,", 0) == 0)
            continue;
        dpm::CellResult c;
        std::stringstream ss(line);
        std::string tok;
        std::getline(ss, c.dataset, ',');
        std::getline(ss, c.algorithm, ',');
        std::getline(ss, tok, ',');
        c.rho = std::stod(tok);
        std::getline(ss, tok, ',');
        c.sigma = std::stod(tok);
        std::getline(ss, tok, ',');
        c.repeat = std::stoi(tok);
        std::getline(ss, tok, ',');
        c.ratio = std::stod(tok);
        cells.push_back(c);
    }
    std::printf("%-16s %8s %12s %10s\n", "algorithm", "sigma", "mean_ratio", "std");
    for (const auto& s : dpm::summarize(cells))
        std::printf("%-16s %8.3g %12.5f %10.5f\n", s.algorithm.c_str(), s.sigma,
                    s.mean_ratio, s.std_ratio);
    return 0;
}

struct Verifier {
    bool ok = true;

    void check(const std::string& what, double worst, double tol) {
        const bool pass = worst <= tol;
        std::printf("%-44s worst=%+.3e tol=%.0e  %s\n", what.c_str(), worst, tol,
                    pass ? "ok" : "FAIL");
        if (!pass) ok = false;
    }
};

int cmd_verify(const std::string& scope, double fine) {
    Verifier v;
    const double s1 = 0.05 / fine, s2 = 0.25 / fine;
    if (scope == "ski" || scope == "all") {
        auto rep = dpm::competitiveness_sweep(grid(1.0, dpm::kRhoMax, s1),
                                              grid(0.0, 3.0, s1),
                                              grid(0.0, 5.0, s1));
        std::printf("  worst offender: rho=%.4f tau=%.4f x=%.4f\n", rep.rho,
                    rep.tau, rep.x);
        v.check("competitiveness (mu = mu(rho))", rep.max_violation, 1e-7);

        double dom = -1e300;
        for (double rho : grid(1.0, dpm::kRhoMax, s2))
            for (double tau : grid(0.0, 3.0, s2))
                dom = std::max(dom, dpm::mu_tau(rho, tau) - dpm::mu_of_rho(rho));
        v.check("mu_tau <= mu(rho)", dom, 1e-9);

        double mono = -1e300;
        for (double rho : grid(1.0, dpm::kRhoMax, 0.1)) {
            const double mu = dpm::mu_of_rho(rho);
            const auto taus = grid(0.0, 3.0, s2);
            std::vector<dpm::BuyDistribution> ds;
            for (double tau : taus)
                ds.push_back(dpm::build_cdf_unchecked(rho, mu, tau));
            for (std::size_t i = 0; i + 1 < ds.size(); ++i)
                for (double t : grid(0.0, 3.0, s1))
                    mono = std::max(mono, dpm::cdf_eval(ds[i], t) -
                                              dpm::cdf_eval(ds[i + 1], t));
        }
        v.check("monotonicity of F_tau in tau", mono, 1e-10);

        double tight = 0.0;
        for (auto [rho, tau] : {std::pair{1.3, std::log(2.0)},
                                std::pair{1.1, 1.5}, std::pair{1.16, 0.3}})
            tight = std::max(tight, dpm::tightness_check(rho, tau).max_gap);
        v.check("tightness at mu = mu_tau", tight, 1e-7);
    }
    if (scope == "dpm" || scope == "all") {
        for (const auto& [name, sys] :
             {std::pair{"two-state", dpm::two_state_system()},
              std::pair{"ibm", dpm::ibm_system()}}) {
            double worst = -1e300;
            for (double rho : {1.0, 1.16, 1.3, dpm::kRhoMax}) {
                const double mu = dpm::mu_of_rho(rho);
                for (double tau : grid(0.0, 8.0, s2)) {
                    const auto pol = dpm::build_policy(sys, rho, mu, tau);
                    for (double len : grid(0.0, 10.0, s2)) {
                        const double bound =
                            rho * dpm::offline_opt(sys, len) +
                            mu * sys.alpha[0] * std::abs(tau - len);
                        worst = std::max(
                            worst, dpm::expected_period_cost(pol, len) - bound);
                    }
                }
            }
            v.check(std::string("reduction bound (") + name + ")", worst, 1e-7);
        }
        double prud = -1e300;
        const auto sys = dpm::ibm_system();
        for (double tau : grid(0.0, 4.0, 0.5 / fine)) {
            const auto pol =
                dpm::build_policy(sys, 1.16, dpm::mu_of_rho(1.16), tau);
            for (double len : grid(0.0, 8.0, 0.5 / fine))
                prud = std::max(prud,
                                dpm::expected_prudent_period_cost(pol, len) -
                                    dpm::expected_period_cost(pol, len));
        }
        v.check("prudent cost <= plain cost", prud, 1e-7);
    }
    return v.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"learning-augmented ski rental / power management toolkit"};
    app.require_subcommand(1);

    std::string config, out, scope = "all", in;
    std::uint64_t seed = 0;
    bool no_prudent = false;
    int parallel = 0;
    double fine = 1.0;

    auto* gen = app.add_subcommand("gen", "generate a dataset file");
    gen->add_option("--config", config)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--out", out);

    auto* run = app.add_subcommand("run", "run experiments, print summary");
    run->add_option("--config", config)->required();
    run->add_option("--seed", seed);
    run->add_option("--out", out);
    run->add_flag("--no-prudent", no_prudent);
    run->add_option("--parallel", parallel);

    auto* sweep = app.add_subcommand("sweep", "run experiments, write long CSV");
    sweep->add_option("--config", config)->required();
    sweep->add_option("--seed", seed);
    sweep->add_option("--out", out)->required();
    sweep->add_flag("--no-prudent", no_prudent);
    sweep->add_option("--parallel", parallel);

    auto* verify = app.add_subcommand("verify", "run verification sweeps");
    verify->add_option("--scope", scope)->check(CLI::IsMember({"ski", "dpm", "all"}));
    verify->add_option("--fine", fine);

    auto* report = app.add_subcommand("report", "summarize a sweep CSV");
    report->add_option("--in", in)->required();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen(config, seed ? seed : 1, out);
        if (run->parsed())
            return cmd_sweep(config, seed, no_prudent, parallel, out, true);
        if (sweep->parsed())
            return cmd_sweep(config, seed, no_prudent, parallel, out, false);
        if (verify->parsed()) return cmd_verify(scope, fine);
        if (report->parsed()) return cmd_report(in);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
