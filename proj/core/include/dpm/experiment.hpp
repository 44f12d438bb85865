#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpm/datasets.hpp"
#include "dpm/power.hpp"

namespace dpm {

struct ExperimentConfig {
    std::string dataset = "psk4";  // psk4 | psk8 | path to a JSONL file
    std::size_t periods = 10000;
    double uniform_hi = 4.0;
    std::string system = "two_state";  // two_state | ibm
    std::vector<double> sigmas{0, 0.5, 1, 1.5, 2, 2.5, 3, 3.5, 4, 4.5, 5};
    std::vector<std::string> algorithms{"ours", "psk", "adjkr", "ftp"};
    std::vector<double> rho_grid;        // experts for combined runs
    std::vector<double> adjkr_extra;     // extra consistency values for adjkr
    double eps1 = 0.1;                   // hedge accuracy parameter
    double eps_bound = 1.0;              // cost-bound truncation parameter
    double share_rate = 0.0;             // fixed-share fraction, 0 = plain hedge
    int repeats = 10;
    bool prudent = true;
    std::uint64_t seed = 1;
    int parallel = 0;  // worker threads, 0 = hardware concurrency
};

// Default experiment consistency grid (not the theoretical ladder).
std::vector<double> default_rho_grid();

struct CellResult {
    std::string dataset;
    std::string algorithm;
    double rho = 0.0;  // 0 for combined algorithms
    double sigma = 0.0;
    int repeat = 0;
    double total_cost = 0.0;
    double total_opt = 0.0;
    double ratio = 0.0;
};

struct Summary {
    std::string algorithm;
    double sigma = 0.0;
    double mean_ratio = 0.0;
    double std_ratio = 0.0;
};

// One expert of a combined run: a consistency value plus the unit-policy
// builder shared by every transition of the reduction.
struct Expert {
    std::string name;
    double rho = 0.0;
    UnitPolicyFn fn;
};

Expert make_expert(const std::string& family, double rho);
std::vector<Expert> make_experts(const std::string& family,
                                 const ExperimentConfig& cfg);

// Expected cost charged for one period: policy built from the expert at the
// given prediction, cost-bounded, prudent when requested and multi-state.
double period_cost(const PowerSystem& sys, const Expert& e, double tau,
                   double len, double eps_bound, bool prudent);

IdleDataset make_dataset(const ExperimentConfig& cfg);

// Runs the full (algorithm x sigma x repeat) matrix in a worker pool.
// Deterministic: predictions depend on (seed, sigma, repeat) only, combiner
// draws additionally on the algorithm name.
std::vector<CellResult> run_sweep(const ExperimentConfig& cfg,
                                  const IdleDataset& ds);

std::vector<Summary> summarize(const std::vector<CellResult>& cells);

std::uint64_t config_hash(const ExperimentConfig& cfg);

void write_csv(const std::string& path, const ExperimentConfig& cfg,
               const std::vector<CellResult>& cells);

}  // namespace dpm
