#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dpm/ski_rental.hpp"

namespace dpm {

// Multi-state system: state i runs at power alpha[i] and costs beta[i] to wake
// from. alpha strictly decreasing, beta strictly increasing, beta[0] = 0.
struct PowerSystem {
    std::vector<double> alpha;
    std::vector<double> beta;

    std::size_t states() const { return alpha.size(); }
};

PowerSystem two_state_system();
PowerSystem ibm_system();

// Break-even times t_j of transition j (1-based transition, stored at j-1):
// the idle length at which state j starts beating state j-1.
std::vector<double> breakpoints(const PowerSystem& sys);

// Removes states whose break-even times are out of order; the result has
// strictly increasing breakpoints and the same offline optimum.
PowerSystem prune_states(const PowerSystem& sys);

std::size_t opt_state(const PowerSystem& sys, double len);
double offline_opt(const PowerSystem& sys, double len);

// Builds the unit-cost buying-time distribution for a given unit prediction.
using UnitPolicyFn = std::function<BuyDistribution(double unit_tau)>;

// One idle period's randomized descent schedule: transition j fires at
// threshold t[j-1] * (unit sample of sub[j-1]); a single uniform draw drives
// all transitions, which keeps the thresholds ordered.
struct PeriodPolicy {
    PowerSystem system;  // pruned
    std::vector<double> t;
    std::vector<BuyDistribution> sub;
    double prediction = 0.0;
};

PeriodPolicy build_policy(const PowerSystem& sys, const UnitPolicyFn& make,
                          double tau);
PeriodPolicy build_policy(const PowerSystem& sys, double rho, double mu, double tau);

// Cost of one idle period of length len when the shared uniform draw is u.
double run_period(const PeriodPolicy& policy, double u, double len);

// Exact expectation of run_period over u.
double expected_period_cost(const PeriodPolicy& policy, double len);

// P(transition j has fired by time t), j in 1..k.
double transition_cdf(const PeriodPolicy& policy, std::size_t j, double t);

// State occupation probabilities at time t (size k+1, sums to 1).
std::vector<double> state_probs(const PeriodPolicy& policy, double t);

// Expected wake-up cost accumulated by time t.
double expected_wakeup(const PeriodPolicy& policy, double t);

// Collapses an occupation vector p onto at most two adjacent states with the
// same expected wake-up cost and no higher expected power.
std::vector<double> prudent_vector(const PowerSystem& sys,
                                   const std::vector<double>& p);

// Expected period cost when the schedule is replaced, at every instant, by the
// prudent collapse of its occupation vector. Wake-up cost is unchanged.
double expected_prudent_period_cost(const PeriodPolicy& policy, double len);

// Applies the bounded-cost truncation to every transition distribution.
PeriodPolicy make_bounded(PeriodPolicy policy, double eps);

}  // namespace dpm
