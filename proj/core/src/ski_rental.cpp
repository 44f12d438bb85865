#include "dpm/ski_rental.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpm/numeric.hpp"

namespace dpm {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kMuSlack = 1e-9;  // tolerated shortfall of mu below mu_tau
constexpr double kMassTol = 1e-12;

void check_rho(double rho) {
    if (!(rho >= 1.0 - kDomainSlack && rho <= kRhoMax + kDomainSlack))
        throw std::domain_error("rho must lie in [1, e/(e-1)]");
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double Segment::mass() const { return coeff * (std::exp(hi) - std::exp(lo)); }

double BuyDistribution::total_mass() const {
    double m = atom_zero + atom_infinity;
    for (const auto& s : segments) m += s.mass();
    if (cutoff) m += cutoff->prob;
    return m;
}

double solve_T(double rho) {
    check_rho(rho);
    rho = std::clamp(rho, 1.0, kRhoMax);
    const double target = 1.0 - 1.0 / rho;
    if (target <= 0.0) return 0.0;
    if (target >= std::exp(-1.0)) return 1.0;
    return bisect([target](double t) { return t * t * std::exp(-t) - target; }, 0.0, 1.0);
}

double mu_of_rho(double rho) {
    check_rho(rho);
    if (rho >= kRhoMax - kDomainSlack) return 0.0;
    const double first = (1.0 - rho * (kE - 1.0) / kE) / std::log(2.0);
    const double t = solve_T(rho);
    const double second = rho * (1.0 - t) * std::exp(-t);
    return clamp01(std::max(first, second));
}

double rho_tilde() {
    static const double value = bisect(
        [](double r) {
            const double first = (1.0 - r * (kE - 1.0) / kE) / std::log(2.0);
            const double t = solve_T(r);
            return first - r * (1.0 - t) * std::exp(-t);  // <= 0 left of crossing
        },
        1.0, 1.3);
    return value;
}

double mu_tilde() {
    static const double value = mu_of_rho(rho_tilde());
    return value;
}

double t_of_tau_mu(double rho, double mu, double tau) {
    if (!(tau > 1.0)) throw std::domain_error("t_of_tau_mu: tau must exceed 1");
    if (!(mu * tau < 1.0)) throw std::domain_error("t_of_tau_mu: mu*tau must be < 1");
    const double den = mu * tau + rho - mu - 1.0;
    if (den <= 0.0) throw std::domain_error("t_of_tau_mu: degenerate parameters");
    const double hi = std::log((rho - mu) / den);
    const double lo = (rho - 2.0 * mu <= 0.0)
                          ? -std::numeric_limits<double>::infinity()
                          : std::log((rho - 2.0 * mu) / den);
    if (lo > hi + 1e-9) throw std::runtime_error("t_of_tau_mu: empty feasible interval");
    return std::clamp(tau - 1.0, std::min(lo, hi), hi);
}

double case3_cost(double rho, double tau, double mu) {
    if (mu * tau >= 1.0) return 1.0;  // buy at time 0
    const double den = mu * tau + rho - mu - 1.0;
    if (den <= 0.0) return std::numeric_limits<double>::infinity();
    const double t = t_of_tau_mu(rho, mu, tau);
    return rho * tau + (t - tau) * den * std::exp(t);
}

double mu_tau(double rho, double tau) {
    check_rho(rho);
    if (tau < 0.0) throw std::domain_error("mu_tau: tau must be non-negative");
    rho = std::clamp(rho, 1.0, kRhoMax);
    if (tau <= 1.0) {
        if ((1.0 - tau) * std::exp(tau - 1.0) > 2.0 - 2.0 / rho)
            return clamp01(-(rho - 1.0) / (1.0 - tau) + rho * std::exp(tau - 1.0));
        return clamp01(std::exp(tau) * (1.0 - rho * (kE - 1.0) / kE) /
                       (2.0 - (1.0 - tau) * std::exp(tau)));
    }
    // Root of cost(tau, mu) = rho; cost is decreasing in mu, equals 1 at mu = 1/tau.
    const double root = bisect(
        [rho, tau](double m) {
            const double c = case3_cost(rho, tau, m);
            return std::isinf(c) ? -1.0 : rho - c;
        },
        0.0, 1.0 / tau);
    return clamp01(root);
}

namespace {

// Emits the applicable-case distribution; assumes mu is feasible for tau.
BuyDistribution build_core(double rho, double mu, double tau) {
    BuyDistribution d;
    d.prediction = tau;
    d.params = {rho, mu};

    if (tau > 1.0) {
        // Prediction says buy. Density up to T, possibly never-buy mass.
        if (mu * tau >= 1.0 - 1e-15) {
            d.atom_zero = 1.0;
            return d;
        }
        const double c1 = mu * tau + rho - mu - 1.0;
        if (c1 <= 0.0)
            throw std::invalid_argument("build_cdf: infeasible (rho, mu) for tau > 1");
        const double t = t_of_tau_mu(rho, mu, tau);
        d.atom_zero = mu * tau;
        if (t > 0.0) d.segments.push_back({0.0, t, c1});
        d.atom_infinity = rho - mu - c1 * std::exp(t);
    } else if (mu * tau < mu - rho + 1.0) {
        // Short prediction: no early density, aim for tightness at x = tau.
        const double p0 = (tau > 0.0) ? tau * (rho - 1.0) / (1.0 - tau) : 0.0;
        d.atom_zero = p0;
        d.atom_infinity = std::min(mu, 1.0 - p0);
        const double rem = 1.0 - p0 - d.atom_infinity;
        if (rem > 1e-15) {
            double b = 1.0 + std::log1p(-rem / rho);
            if (b < tau - kMuSlack)
                throw std::invalid_argument("build_cdf: mu below mu_tau (case 1)");
            b = std::clamp(b, tau, 1.0);
            d.segments.push_back({b, 1.0, rho * std::exp(-1.0)});
        }
    } else {
        // tau <= 1, moderate prediction: early density, gap, late density.
        const double p0 = mu * tau;
        d.atom_zero = p0;
        d.atom_infinity = std::min(mu, 1.0 - p0);
        const double c1 = std::max(0.0, mu * tau + rho - mu - 1.0);
        const double avail = 1.0 - p0 - d.atom_infinity;
        double early_mass = 0.0;
        double a = tau;
        if (c1 > 0.0) {
            const double full = c1 * (std::exp(tau) - 1.0);
            if (full <= avail) {
                early_mass = full;
            } else {
                a = std::log1p(avail / c1);
                early_mass = avail;
            }
            if (a > 0.0) d.segments.push_back({0.0, a, c1});
        }
        const double rem = avail - early_mass;
        if (rem > 1e-15) {
            double b = 1.0 + std::log1p(-rem / rho);
            if (b < tau - kMuSlack)
                throw std::invalid_argument("build_cdf: mu below mu_tau (case 2)");
            b = std::clamp(b, tau, 1.0);
            d.segments.push_back({b, 1.0, rho * std::exp(-1.0)});
        }
    }

    const double total = d.total_mass();
    if (std::abs(total - 1.0) > 1e-9)
        throw std::runtime_error("build_cdf: probability mass does not sum to 1");
    d.atom_infinity = std::max(0.0, d.atom_infinity + (1.0 - total));
    return d;
}

}  // namespace

BuyDistribution build_cdf(double rho, double mu, double tau) {
    check_rho(rho);
    if (tau < 0.0) throw std::domain_error("build_cdf: tau must be non-negative");
    if (mu < -kDomainSlack || mu > 1.0 + kDomainSlack)
        throw std::domain_error("build_cdf: mu must lie in [0, 1]");
    rho = std::clamp(rho, 1.0, kRhoMax);
    mu = clamp01(mu);
    const double required = mu_tau(rho, tau);
    if (mu < required - kMuSlack)
        throw std::invalid_argument("build_cdf: mu below mu_tau(rho, tau)");
    return build_core(rho, std::max(mu, required), tau);
}

BuyDistribution build_cdf_unchecked(double rho, double mu, double tau) {
    return build_core(std::clamp(rho, 1.0, kRhoMax), clamp01(mu), tau);
}

double cdf_eval(const BuyDistribution& dist, double t) {
    if (t < 0.0) return 0.0;
    double f = dist.atom_zero;
    for (const auto& s : dist.segments) {
        if (t <= s.lo) break;
        f += s.coeff * (std::exp(std::min(t, s.hi)) - std::exp(s.lo));
    }
    if (dist.cutoff && t >= dist.cutoff->time) f += dist.cutoff->prob;
    return std::min(f, 1.0);
}

double sample_buy_time(const BuyDistribution& dist, double u) {
    if (u < 0.0 || u > 1.0) throw std::domain_error("sample_buy_time: u outside [0,1]");
    if (u == 0.0) {
        if (dist.atom_zero > 0.0) return 0.0;
        if (!dist.segments.empty()) return dist.segments.front().lo;
        if (dist.cutoff && dist.cutoff->prob > 0.0) return dist.cutoff->time;
        return kNever;
    }
    double f = dist.atom_zero;
    if (u <= f) return 0.0;
    double last = 0.0;
    for (const auto& s : dist.segments) {
        const double m = s.mass();
        if (m > 0.0 && u <= f + m) {
            const double t = std::log(std::exp(s.lo) + (u - f) / s.coeff);
            return std::min(t, s.hi);
        }
        f += m;
        last = s.hi;
    }
    if (dist.cutoff && dist.cutoff->prob > 0.0 && u <= f + dist.cutoff->prob)
        return dist.cutoff->time;
    if (dist.atom_infinity <= 0.0) return dist.cutoff ? dist.cutoff->time : last;
    return kNever;
}

double expected_cost(const BuyDistribution& dist, double x) {
    if (x < 0.0) throw std::domain_error("expected_cost: x must be non-negative");
    double cost = dist.atom_zero;  // buying at 0 costs the unit buy price
    double fx = dist.atom_zero;
    for (const auto& s : dist.segments) {
        const double hi = std::min(s.hi, x);
        if (hi > s.lo) {
            // integral of (1+t) c e^t over (lo, hi] is c (t e^t) evaluated there
            cost += s.coeff * (hi * std::exp(hi) - s.lo * std::exp(s.lo));
            fx += s.coeff * (std::exp(hi) - std::exp(s.lo));
        }
    }
    if (dist.cutoff && dist.cutoff->time <= x) {
        cost += (1.0 + dist.cutoff->time) * dist.cutoff->prob;
        fx += dist.cutoff->prob;
    }
    cost += x * std::max(0.0, 1.0 - fx);
    return cost;
}

ScaledPolicy scale(BuyDistribution unit, CostPair costs) {
    if (costs.rent_rate <= 0.0 || costs.buy_cost <= 0.0)
        throw std::domain_error("scale: costs must be positive");
    return {std::move(unit), costs};
}

double scaled_cdf(const ScaledPolicy& p, double t) {
    return cdf_eval(p.unit, p.costs.rent_rate / p.costs.buy_cost * t);
}

double scaled_sample(const ScaledPolicy& p, double u) {
    return p.costs.buy_cost / p.costs.rent_rate * sample_buy_time(p.unit, u);
}

double scaled_expected_cost(const ScaledPolicy& p, double x) {
    return p.costs.buy_cost *
           expected_cost(p.unit, p.costs.rent_rate / p.costs.buy_cost * x);
}

BuyDistribution bounded_variant(const BuyDistribution& dist, double eps, CostPair costs) {
    if (eps <= 0.0) throw std::domain_error("bounded_variant: eps must be positive");
    if (costs.rent_rate <= 0.0 || costs.buy_cost <= 0.0)
        throw std::domain_error("bounded_variant: costs must be positive");
    const double u = 3.0 + 1.0 / eps;  // unit-time cutoff; (beta/alpha)(3+1/eps) real time
    BuyDistribution out;
    out.atom_zero = dist.atom_zero;
    out.prediction = dist.prediction;
    out.params = dist.params;
    double moved = dist.atom_infinity;
    for (const auto& s : dist.segments) {
        if (s.lo >= u) {
            moved += s.mass();
        } else if (s.hi <= u) {
            out.segments.push_back(s);
        } else {
            out.segments.push_back({s.lo, u, s.coeff});
            moved += Segment{u, s.hi, s.coeff}.mass();
        }
    }
    if (dist.cutoff) {
        if (dist.cutoff->time < u) {
            if (moved > 0.0)
                throw std::logic_error("bounded_variant: cannot merge two finite atoms");
            out.cutoff = dist.cutoff;
            return out;
        }
        moved += dist.cutoff->prob;
    }
    out.cutoff = CutoffAtom{u, moved};
    out.atom_infinity = 0.0;
    return out;
}

}  // namespace dpm
