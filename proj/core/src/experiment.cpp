#include "dpm/experiment.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dpm/baselines.hpp"
#include "dpm/combiner.hpp"
#include "dpm/numeric.hpp"
#include "dpm/predictors.hpp"
#include "dpm/rng.hpp"

namespace dpm {

namespace {

std::uint64_t hash_double(std::uint64_t seed, double v) {
    return hash_mix(seed, std::bit_cast<std::uint64_t>(v));
}

std::string rho_label(const std::string& family, double rho) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s@%.4g", family.c_str(), rho);
    return buf;
}

PowerSystem system_by_name(const std::string& name) {
    if (name == "two_state") return two_state_system();
    if (name == "ibm") return ibm_system();
    throw std::invalid_argument("unknown system: " + name);
}

}  // namespace

std::vector<double> default_rho_grid() {
    return {1.0, 1.1, 1.16, 1.3, 1.4, 1.5, kRhoMax};
}

Expert make_expert(const std::string& family, double rho) {
    Expert e;
    e.rho = rho;
    e.name = rho_label(family, rho);
    if (family == "ours") {
        const double mu = mu_of_rho(rho);
        e.fn = [rho, mu](double ut) { return build_cdf_unchecked(rho, mu, ut); };
    } else if (family == "psk") {
        const double lambda = psk_lambda_for(rho);
        e.fn = [lambda](double ut) { return psk_rand(ut, lambda); };
    } else if (family == "adjkr") {
        const double lambda = std::clamp(rho - 1.0, 0.0, 1.0);
        e.fn = [lambda](double ut) { return adjkr_det(ut, lambda); };
    } else if (family == "ftp") {
        e.name = "ftp";
        e.rho = 1.0;
        e.fn = [](double ut) { return ftp(ut); };
    } else if (family == "classic") {
        e.name = "classic";
        e.rho = kRhoMax;
        e.fn = [](double) { return rand_classic(); };
    } else if (family == "det2") {
        e.name = "det2";
        e.rho = 2.0;
        e.fn = [](double) { return det_breakeven(); };
    } else {
        throw std::invalid_argument("unknown algorithm family: " + family);
    }
    return e;
}

std::vector<Expert> make_experts(const std::string& family,
                                 const ExperimentConfig& cfg) {
    std::vector<double> grid =
        cfg.rho_grid.empty() ? default_rho_grid() : cfg.rho_grid;
    std::vector<Expert> experts;
    if (family == "ours" || family == "psk") {
        for (double r : grid) experts.push_back(make_expert(family, r));
    } else if (family == "adjkr") {
        for (double r : grid) experts.push_back(make_expert(family, r));
        for (double r : cfg.adjkr_extra) experts.push_back(make_expert(family, r));
    } else if (family == "ftp") {
        // A non-robust expert on its own; paired with the classical rule.
        experts.push_back(make_expert("ftp", 1.0));
        experts.push_back(make_expert("classic", kRhoMax));
    } else {
        experts.push_back(make_expert(family, 0.0));
    }
    return experts;
}

double period_cost(const PowerSystem& sys, const Expert& e, double tau,
                   double len, double eps_bound, bool prudent) {
    PeriodPolicy policy = make_bounded(build_policy(sys, e.fn, tau), eps_bound);
    if (prudent && sys.states() > 2)
        return expected_prudent_period_cost(policy, len);
    return expected_period_cost(policy, len);
}

IdleDataset make_dataset(const ExperimentConfig& cfg) {
    if (cfg.dataset == "psk4" || cfg.dataset == "psk8") {
        const double hi = (cfg.dataset == "psk4") ? 4.0 : 8.0;
        IdleDataset ds = gen_uniform(cfg.periods, hi, hash_str(cfg.seed, cfg.dataset));
        ds.source = cfg.dataset;
        return ds;
    }
    IdleDataset ds = load_dataset(cfg.dataset);
    if (cfg.periods > 0 && ds.lengths.size() > cfg.periods)
        ds.lengths.resize(cfg.periods);
    return ds;
}

namespace {

struct Cell {
    std::string algorithm;
    double sigma = 0.0;
    int repeat = 0;
};

// family before '@' means combined; family@rho pins a single expert.
CellResult run_cell(const ExperimentConfig& cfg, const PowerSystem& sys,
                    const IdleDataset& ds, const Cell& cell) {
    std::string family = cell.algorithm;
    double fixed_rho = -1.0;
    if (auto at = cell.algorithm.find('@'); at != std::string::npos) {
        family = cell.algorithm.substr(0, at);
        fixed_rho = std::stod(cell.algorithm.substr(at + 1));
    }
    const bool combined =
        fixed_rho < 0.0 && family != "classic" && family != "det2";

    std::vector<Expert> experts;
    if (combined)
        experts = make_experts(family, cfg);
    else if (family == "classic" || family == "det2")
        experts.push_back(make_expert(family, 0.0));
    else
        experts.push_back(make_expert(family, fixed_rho));

    // Predictions are shared by every algorithm in a (sigma, repeat) slot.
    const std::uint64_t pred_seed = hash_mix(
        hash_double(hash_str(cfg.seed, "pred"), cell.sigma),
        static_cast<std::uint64_t>(cell.repeat));
    Rng pred_rng(pred_seed);

    const std::uint64_t pick_seed = hash_mix(
        hash_double(hash_str(cfg.seed, "pick:" + cell.algorithm), cell.sigma),
        static_cast<std::uint64_t>(cell.repeat));
    Rng pick_rng(pick_seed);

    const double bound = sys.beta.back() * (4.0 + 1.0 / cfg.eps_bound);
    CombinerState st = combiner_init(experts.size(), cfg.eps1 / bound,
                                     cfg.share_rate);

    CellResult res;
    res.dataset = ds.source;
    res.algorithm = cell.algorithm;
    res.rho = combined ? 0.0 : experts[0].rho;
    res.sigma = cell.sigma;
    res.repeat = cell.repeat;

    std::vector<double> costs(experts.size());
    for (std::size_t i = 0; i < ds.lengths.size(); ++i) {
        const double len = ds.lengths[i];
        const double z = pred_rng.normal();
        const double tau =
            ds.predictions.empty()
                ? noisy_prediction(len, cell.sigma, z)
                : noisy_prediction(ds.predictions[i], cell.sigma, z);
        for (std::size_t j = 0; j < experts.size(); ++j)
            costs[j] = period_cost(sys, experts[j], tau, len, cfg.eps_bound,
                                   cfg.prudent);
        std::size_t pick = 0;
        if (experts.size() > 1) pick = combiner_choose(st, pick_rng.uniform());
        res.total_cost += costs[pick];
        res.total_opt += offline_opt(sys, len);
        if (experts.size() > 1) combiner_step(st, costs);
    }
    res.ratio = (res.total_opt > 0.0) ? res.total_cost / res.total_opt : 0.0;
    return res;
}

}  // namespace

std::vector<CellResult> run_sweep(const ExperimentConfig& cfg,
                                  const IdleDataset& ds) {
    const PowerSystem sys = prune_states(system_by_name(cfg.system));
    std::vector<Cell> cells;
    for (const auto& algo : cfg.algorithms)
        for (double sigma : cfg.sigmas)
            for (int r = 0; r < cfg.repeats; ++r) cells.push_back({algo, sigma, r});

    std::vector<CellResult> out(cells.size());
    unsigned workers = cfg.parallel > 0
                           ? static_cast<unsigned>(cfg.parallel)
                           : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, cells.size() == 0 ? 1 : cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            out[i] = run_cell(cfg, sys, ds, cells[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

std::vector<Summary> summarize(const std::vector<CellResult>& cells) {
    std::vector<Summary> out;
    for (const auto& c : cells) {
        Summary* s = nullptr;
        for (auto& cand : out)
            if (cand.algorithm == c.algorithm && cand.sigma == c.sigma) s = &cand;
        if (!s) {
            out.push_back({c.algorithm, c.sigma, 0.0, 0.0});
            s = &out.back();
        }
        s->mean_ratio += c.ratio;      // sums for now
        s->std_ratio += c.ratio * c.ratio;
    }
    for (auto& s : out) {
        std::size_t n = 0;
        // recover the count; cells per summary slot share algorithm and sigma
        // (second pass keeps the first loop allocation-free)
        n = 0;
        for (const auto& c : cells)
            if (c.algorithm == s.algorithm && c.sigma == s.sigma) ++n;
        const double mean = s.mean_ratio / n;
        const double var =
            (n > 1) ? std::max(0.0, (s.std_ratio - n * mean * mean) / (n - 1))
                    : 0.0;
        s.mean_ratio = mean;
        s.std_ratio = std::sqrt(var);
    }
    return out;
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
    std::ostringstream ss;
    ss << cfg.dataset << '|' << cfg.periods << '|' << cfg.uniform_hi << '|'
       << cfg.system << '|' << cfg.eps1 << '|' << cfg.eps_bound << '|'
       << cfg.share_rate << '|' << cfg.repeats << '|' << cfg.prudent << '|'
       << cfg.seed;
    for (double s : cfg.sigmas) ss << ',' << s;
    for (const auto& a : cfg.algorithms) ss << ',' << a;
    for (double r : cfg.rho_grid) ss << ',' << r;
    for (double r : cfg.adjkr_extra) ss << ',' << r;
    return hash_str(0x9e3779b97f4a7c15ULL, ss.str());
}

void write_csv(const std::string& path, const ExperimentConfig& cfg,
               const std::vector<CellResult>& cells) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot write " + path);
    char buf[256];
    std::snprintf(buf, sizeof(buf), "# config_hash=%016llx\n",
                  static_cast<unsigned long long>(config_hash(cfg)));
    out << buf;
    out << "dataset,algorithm,rho,sigma,seed,ratio,total_cost,total_opt\n";
    for (const auto& c : cells) {
        std::snprintf(buf, sizeof(buf), "%s,%s,%.6g,%.6g,%d,%.10g,%.10g,%.10g\n",
                      c.dataset.c_str(), c.algorithm.c_str(), c.rho, c.sigma,
                      c.repeat, c.ratio, c.total_cost, c.total_opt);
        out << buf;
    }
}

}  // namespace dpm
