#include "dpm/power.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpm/numeric.hpp"

namespace dpm {

namespace {

void check_system(const PowerSystem& sys) {
    const auto k = sys.alpha.size();
    if (k < 2 || sys.beta.size() != k)
        throw std::invalid_argument("power system needs >= 2 matching states");
    if (sys.beta.front() != 0.0)
        throw std::invalid_argument("first state must have zero wake-up cost");
    for (std::size_t i = 1; i < k; ++i) {
        if (!(sys.alpha[i] < sys.alpha[i - 1]))
            throw std::invalid_argument("alpha must be strictly decreasing");
        if (!(sys.beta[i] > sys.beta[i - 1]))
            throw std::invalid_argument("beta must be strictly increasing");
    }
}

double cross(const PowerSystem& s, std::size_t a, std::size_t b) {
    return (s.beta[b] - s.beta[a]) / (s.alpha[a] - s.alpha[b]);
}

}  // namespace

PowerSystem two_state_system() { return {{1.0, 0.0}, {0.0, 1.0}}; }

PowerSystem ibm_system() {
    return {{1.0, 0.47, 0.105, 0.0}, {0.0, 0.12, 0.33, 1.0}};
}

std::vector<double> breakpoints(const PowerSystem& sys) {
    check_system(sys);
    std::vector<double> t(sys.states() - 1);
    for (std::size_t j = 1; j < sys.states(); ++j) t[j - 1] = cross(sys, j - 1, j);
    return t;
}

PowerSystem prune_states(const PowerSystem& sys) {
    check_system(sys);
    // Lower envelope of the lines alpha_i * len + beta_i over len >= 0.
    std::vector<std::size_t> keep{0};
    for (std::size_t j = 1; j < sys.states(); ++j) {
        while (keep.size() >= 2 &&
               cross(sys, keep[keep.size() - 2], keep.back()) >=
                   cross(sys, keep.back(), j))
            keep.pop_back();
        keep.push_back(j);
    }
    PowerSystem out;
    for (std::size_t i : keep) {
        out.alpha.push_back(sys.alpha[i]);
        out.beta.push_back(sys.beta[i]);
    }
    return out;
}

std::size_t opt_state(const PowerSystem& sys, double len) {
    check_system(sys);
    std::size_t best = 0;
    double best_cost = sys.alpha[0] * len;
    for (std::size_t i = 1; i < sys.states(); ++i) {
        const double c = sys.alpha[i] * len + sys.beta[i];
        if (c < best_cost) {
            best = i;
            best_cost = c;
        }
    }
    return best;
}

double offline_opt(const PowerSystem& sys, double len) {
    const std::size_t i = opt_state(sys, len);
    return sys.alpha[i] * len + sys.beta[i];
}

PeriodPolicy build_policy(const PowerSystem& sys, const UnitPolicyFn& make,
                          double tau) {
    PeriodPolicy p;
    p.system = prune_states(sys);
    p.t = breakpoints(p.system);
    p.prediction = tau;
    p.sub.reserve(p.t.size());
    for (double tj : p.t) p.sub.push_back(make(tau / tj));
    return p;
}

PeriodPolicy build_policy(const PowerSystem& sys, double rho, double mu, double tau) {
    return build_policy(
        sys, [rho, mu](double ut) { return build_cdf_unchecked(rho, mu, ut); }, tau);
}

double run_period(const PeriodPolicy& policy, double u, double len) {
    const auto& sys = policy.system;
    const std::size_t k = policy.t.size();
    double cost = 0.0;
    double prev = 0.0;  // time the previous transition fired
    std::size_t state = 0;
    for (std::size_t j = 0; j < k; ++j) {
        double a = policy.t[j] * sample_buy_time(policy.sub[j], u);
        a = std::max(a, prev);
        if (a > len) break;
        cost += (a - prev) * sys.alpha[state] + (sys.beta[j + 1] - sys.beta[j]);
        prev = a;
        state = j + 1;
    }
    return cost + (len - prev) * sys.alpha[state];
}

double expected_period_cost(const PeriodPolicy& policy, double len) {
    const auto& sys = policy.system;
    double cost = sys.alpha.back() * len;
    for (std::size_t j = 0; j < policy.t.size(); ++j)
        cost += (sys.beta[j + 1] - sys.beta[j]) *
                expected_cost(policy.sub[j], len / policy.t[j]);
    return cost;
}

double transition_cdf(const PeriodPolicy& policy, std::size_t j, double t) {
    if (j < 1 || j > policy.t.size())
        throw std::out_of_range("transition_cdf: bad transition index");
    return cdf_eval(policy.sub[j - 1], t / policy.t[j - 1]);
}

std::vector<double> state_probs(const PeriodPolicy& policy, double t) {
    const std::size_t k = policy.t.size();
    std::vector<double> f(k + 2);
    f[0] = 1.0;
    for (std::size_t j = 1; j <= k; ++j) f[j] = transition_cdf(policy, j, t);
    f[k + 1] = 0.0;
    std::vector<double> p(k + 1);
    for (std::size_t i = 0; i <= k; ++i) p[i] = std::max(0.0, f[i] - f[i + 1]);
    return p;
}

double expected_wakeup(const PeriodPolicy& policy, double t) {
    const auto& sys = policy.system;
    double b = 0.0;
    for (std::size_t j = 1; j <= policy.t.size(); ++j)
        b += (sys.beta[j] - sys.beta[j - 1]) * transition_cdf(policy, j, t);
    return b;
}

std::vector<double> prudent_vector(const PowerSystem& sys,
                                   const std::vector<double>& p) {
    check_system(sys);
    const std::size_t k = sys.states() - 1;
    if (p.size() != k + 1)
        throw std::invalid_argument("prudent_vector: wrong vector length");
    double bp = 0.0;
    for (std::size_t i = 0; i <= k; ++i) bp += p[i] * sys.beta[i];
    std::vector<double> out(k + 1, 0.0);
    std::size_t m = 0;
    while (m < k && sys.beta[m + 1] <= bp) ++m;
    if (m == k) {
        out[k] = 1.0;
        return out;
    }
    out[m] = (sys.beta[m + 1] - bp) / (sys.beta[m + 1] - sys.beta[m]);
    out[m + 1] = 1.0 - out[m];
    return out;
}

namespace {

// Power drawn by the prudent pair holding expected wake-up cost b.
double prudent_power(const PowerSystem& sys, double b) {
    const std::size_t k = sys.states() - 1;
    b = std::clamp(b, 0.0, sys.beta[k]);
    std::size_t m = 0;
    while (m + 1 < k && sys.beta[m + 1] <= b) ++m;
    const double w = (b - sys.beta[m]) / (sys.beta[m + 1] - sys.beta[m]);
    return sys.alpha[m] + w * (sys.alpha[m + 1] - sys.alpha[m]);
}

}  // namespace

double expected_prudent_period_cost(const PeriodPolicy& policy, double len) {
    const auto& sys = policy.system;
    const std::size_t k = policy.t.size();
    const double wake = expected_wakeup(policy, len);
    if (len <= 0.0) return wake;

    // Split the integral at every kink: images of the sub-distribution
    // segment edges, plus the times where the expected wake-up cost crosses
    // a state's beta (the prudent pair changes there).
    std::vector<double> cuts{0.0, len};
    for (std::size_t j = 0; j < k; ++j) {
        const auto& d = policy.sub[j];
        auto add = [&](double unit_t) {
            const double t = unit_t * policy.t[j];
            if (t > 0.0 && t < len) cuts.push_back(t);
        };
        for (const auto& s : d.segments) {
            add(s.lo);
            add(s.hi);
        }
        if (d.cutoff) add(d.cutoff->time);
    }
    const double b0 = expected_wakeup(policy, 0.0);
    for (std::size_t i = 1; i < sys.states() - 1; ++i) {
        const double target = sys.beta[i];
        if (b0 < target && target < wake) {
            const double t = bisect(
                [&](double x) { return expected_wakeup(policy, x) - target; }, 0.0,
                len, 80);
            if (t > 0.0 && t < len) cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto power = [&](double t) {
        return prudent_power(sys, expected_wakeup(policy, t));
    };
    double run = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        run += adaptive_simpson(power, cuts[i], cuts[i + 1], 1e-12);
    return run + wake;
}

PeriodPolicy make_bounded(PeriodPolicy policy, double eps) {
    for (auto& d : policy.sub) d = bounded_variant(d, eps);
    return policy;
}

}  // namespace dpm
