#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpm/power.hpp"
#include "dpm/ski_rental.hpp"

namespace dpm {

// Expected cost at season length x computed by quadrature over the pointwise
// density, independent of the closed-form antiderivative.
double quad_expected_cost(const BuyDistribution& dist, double x);

struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
};

// Inverse-CDF Monte Carlo with a counter-based generator.
McEstimate mc_expected_cost(const BuyDistribution& dist, double x, std::size_t n,
                            std::uint64_t seed);

enum class MuMode { global, per_tau };  // mu(rho) vs mu_tau(rho)

struct SweepReport {
    double max_violation = -1e300;
    double rho = 0.0, tau = 0.0, x = 0.0;  // worst offender
    bool pass = false;
};

// Max over the grids of expected_cost - (rho * min(x,1) + mu * |tau - x|).
SweepReport competitiveness_sweep(const std::vector<double>& rhos,
                                  const std::vector<double>& taus,
                                  const std::vector<double>& xs,
                                  MuMode mode = MuMode::global,
                                  double mu_scale = 1.0, double tol = 1e-7);

// Where the guarantee holds with equality when mu = mu_tau(rho).
struct TightnessReport {
    double max_gap = 0.0;
    double worst_x = 0.0;
    bool pass = false;
};

TightnessReport tightness_check(double rho, double tau, double tol = 1e-7);

// Direct enumeration, kept deliberately separate from offline_opt.
double brute_opt(const PowerSystem& sys, double len);

}  // namespace dpm
