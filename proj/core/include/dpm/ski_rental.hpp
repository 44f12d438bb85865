#pragma once

#include <limits>
#include <optional>
#include <vector>

namespace dpm {

// Consistency / error-dependence pair of a randomized rent-or-buy policy.
// rho in [1, e/(e-1)], mu in [0, 1].
struct RhoMu {
    double rho = 1.0;
    double mu = 1.0;
};

// Rental rate alpha and buying cost beta of a rent-or-buy instance.
struct CostPair {
    double rent_rate = 1.0;
    double buy_cost = 1.0;
};

// Density c * e^t on the half-open interval (lo, hi].
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    double coeff = 0.0;
    double mass() const;
};

// Point mass at a finite time (used by deterministic baselines and the
// bounded-cost truncation).
struct CutoffAtom {
    double time = 0.0;
    double prob = 0.0;
};

// Mixed distribution of the buying time at unit costs (alpha = beta = 1):
// an atom at 0, piecewise-exponential density pieces, an optional atom at a
// finite cutoff, and the probability of never buying.
struct BuyDistribution {
    double atom_zero = 0.0;
    std::vector<Segment> segments;     // non-overlapping, increasing
    std::optional<CutoffAtom> cutoff;  // beyond all segments when present
    double atom_infinity = 0.0;
    double prediction = 0.0;  // tau at unit-cost scale
    RhoMu params;

    double total_mass() const;
};

inline constexpr double kNever = std::numeric_limits<double>::infinity();

// T in [0,1] solving T^2 e^{-T} = 1 - 1/rho (the map is increasing there).
double solve_T(double rho);

// Optimal worst-case error coefficient achievable with consistency rho.
double mu_of_rho(double rho);

// Crossing point (~1.1596) of the two branches of mu_of_rho, and its mu value.
double rho_tilde();
double mu_tilde();

// Best error coefficient for a fixed prediction tau. Closed form for tau <= 1;
// for tau > 1 the root in mu of case3_cost(rho, tau, mu) = rho.
double mu_tau(double rho, double tau);

// Expected cost at season length tau of the tau > 1 policy, as a function of
// mu (decreasing in mu). +inf when the policy is undefined for that mu.
double case3_cost(double rho, double tau, double mu);

// Support endpoint T of the tau > 1 policy: tau - 1 projected onto the
// feasible interval keeping the never-buy mass within [0, mu].
double t_of_tau_mu(double rho, double mu, double tau);

// The (rho, mu)-competitive buying-time distribution for prediction tau at
// unit costs. Requires mu >= mu_tau(rho, tau) (clamped up when within 1e-9).
BuyDistribution build_cdf(double rho, double mu, double tau);

// Same, but trusts the caller that mu is feasible (e.g. mu = mu_of_rho(rho)).
BuyDistribution build_cdf_unchecked(double rho, double mu, double tau);

// F(t) = P(buy time <= t), exact closed form.
double cdf_eval(const BuyDistribution& dist, double t);

// inf{t : F(t) >= u}; kNever when u exceeds the total finite-time mass.
double sample_buy_time(const BuyDistribution& dist, double u);

// Expected cost when the season ends at x (unit costs): buying at t <= x pays
// 1 + t, otherwise the policy rents for the whole season and pays x.
double expected_cost(const BuyDistribution& dist, double x);

// A unit-cost distribution driven at real costs: the unit policy must have
// been built with prediction (alpha/beta) * tau_original.
struct ScaledPolicy {
    BuyDistribution unit;
    CostPair costs;
};

ScaledPolicy scale(BuyDistribution unit, CostPair costs);
double scaled_cdf(const ScaledPolicy& p, double t);
double scaled_sample(const ScaledPolicy& p, double u);
double scaled_expected_cost(const ScaledPolicy& p, double x);

// Truncation at unit time u = 3 + 1/eps: identical below u, all remaining
// mass becomes an atom at u. Worst-case cost beta * (4 + 1/eps); the policy
// stays (rho, (1+eps) mu)-competitive.
BuyDistribution bounded_variant(const BuyDistribution& dist, double eps,
                                CostPair costs = {1.0, 1.0});

}  // namespace dpm
