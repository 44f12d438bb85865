#pragma once

#include <cstddef>
#include <vector>

namespace dpm {

// Consistency grid for the expert ensemble: the two extremes, the branch
// crossing, and the points whose error coefficient is (1 + i*eps) times the
// crossing value, spaced until the coefficient reaches 1.
std::vector<double> build_rho_grid(double eps);

// Multiplicative-weights state over N experts.
struct CombinerState {
    std::vector<double> w;
    double eta = 0.0;    // learning rate (already divided by the cost bound)
    double share = 0.0;  // fixed-share mixing fraction, 0 disables
};

CombinerState combiner_init(std::size_t n, double eta, double share = 0.0);

// Probability matching: expert index drawn according to the current weights.
std::size_t combiner_choose(const CombinerState& s, double u);

// Redistributes a fraction of the total weight uniformly (tracking experts).
void fixed_share_step(CombinerState& s);

// Exponential update from one round of expert costs (then fixed-share mixing
// when enabled). Weights are renormalized to sum to 1.
void combiner_step(CombinerState& s, const std::vector<double>& costs);

}  // namespace dpm
