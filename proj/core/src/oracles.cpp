#include "dpm/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "dpm/numeric.hpp"
#include "dpm/rng.hpp"

namespace dpm {

double quad_expected_cost(const BuyDistribution& dist, double x) {
    double cost = dist.atom_zero;
    double mass_below = dist.atom_zero;
    for (const auto& s : dist.segments) {
        const double hi = std::min(s.hi, x);
        if (hi <= s.lo) continue;
        const double c = s.coeff;
        cost += adaptive_simpson(
            [c](double t) { return (1.0 + t) * c * std::exp(t); }, s.lo, hi, 1e-11);
        mass_below += adaptive_simpson(
            [c](double t) { return c * std::exp(t); }, s.lo, hi, 1e-11);
    }
    if (dist.cutoff && dist.cutoff->time <= x) {
        cost += (1.0 + dist.cutoff->time) * dist.cutoff->prob;
        mass_below += dist.cutoff->prob;
    }
    cost += x * std::max(0.0, 1.0 - mass_below);
    return cost;
}

McEstimate mc_expected_cost(const BuyDistribution& dist, double x, std::size_t n,
                            std::uint64_t seed) {
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = sample_buy_time(dist, counter_uniform(seed, i));
        const double c = (t <= x) ? 1.0 + t : x;
        sum += c;
        sumsq += c * c;
    }
    const double nn = static_cast<double>(n);
    McEstimate e;
    e.mean = sum / nn;
    const double var = std::max(0.0, sumsq / nn - e.mean * e.mean);
    e.stderr_ = std::sqrt(var / nn);
    return e;
}

SweepReport competitiveness_sweep(const std::vector<double>& rhos,
                                  const std::vector<double>& taus,
                                  const std::vector<double>& xs, MuMode mode,
                                  double mu_scale, double tol) {
    SweepReport r;
    for (double rho : rhos) {
        const double mu_global = mu_of_rho(rho);
        for (double tau : taus) {
            const double mu =
                (mode == MuMode::per_tau) ? mu_tau(rho, tau) : mu_global;
            const BuyDistribution d = build_cdf_unchecked(rho, mu, tau);
            for (double x : xs) {
                const double bound = rho * std::min(x, 1.0) +
                                     mu_scale * mu * std::abs(tau - x);
                const double v = expected_cost(d, x) - bound;
                if (v > r.max_violation) {
                    r.max_violation = v;
                    r.rho = rho;
                    r.tau = tau;
                    r.x = x;
                }
            }
        }
    }
    r.pass = r.max_violation <= tol;
    return r;
}

TightnessReport tightness_check(double rho, double tau, double tol) {
    const double mu = mu_tau(rho, tau);
    const BuyDistribution d = build_cdf_unchecked(rho, mu, tau);
    std::vector<double> xs;
    auto linspace = [&](double a, double b, int n) {
        for (int i = 0; i <= n; ++i) xs.push_back(a + (b - a) * i / n);
    };
    if (tau > 1.0) {
        const double t_end = d.segments.empty() ? 0.0 : d.segments.back().hi;
        linspace(0.0, t_end, 200);
        xs.push_back(tau);
    } else if (mu * tau < mu - rho + 1.0) {
        linspace(tau, 3.0, 200);
    } else {
        linspace(0.0, 3.0, 300);
    }
    TightnessReport rep;
    for (double x : xs) {
        const double rhs = rho * std::min(x, 1.0) + mu * std::abs(tau - x);
        const double gap = std::abs(expected_cost(d, x) - rhs);
        if (gap > rep.max_gap) {
            rep.max_gap = gap;
            rep.worst_x = x;
        }
    }
    rep.pass = rep.max_gap <= tol;
    return rep;
}

double brute_opt(const PowerSystem& sys, double len) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < sys.states(); ++i)
        best = std::min(best, sys.alpha[i] * len + sys.beta[i]);
    return best;
}

}  // namespace dpm
