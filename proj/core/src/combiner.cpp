#include "dpm/combiner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpm/numeric.hpp"
#include "dpm/ski_rental.hpp"

namespace dpm {

std::vector<double> build_rho_grid(double eps) {
    if (eps <= 0.0) throw std::domain_error("build_rho_grid: eps must be positive");
    const double rt = rho_tilde();
    const double mt = mu_tilde();
    std::vector<double> grid{1.0, rt, kRhoMax};
    const int n = static_cast<int>((1.0 - mt) / (mt * eps));
    for (int i = 1; i <= n; ++i) {
        const double target = (1.0 + i * eps) * mt;
        if (target >= 1.0) break;
        // mu is decreasing from 1 to mu_tilde on [1, rho_tilde]
        grid.push_back(bisect(
            [target](double r) { return target - mu_of_rho(r); }, 1.0, rt));
    }
    std::sort(grid.begin(), grid.end());
    return grid;
}

CombinerState combiner_init(std::size_t n, double eta, double share) {
    if (n == 0) throw std::domain_error("combiner_init: need at least one expert");
    CombinerState s;
    s.w.assign(n, 1.0 / static_cast<double>(n));
    s.eta = eta;
    s.share = share;
    return s;
}

std::size_t combiner_choose(const CombinerState& s, double u) {
    double total = 0.0;
    for (double w : s.w) total += w;
    const double target = u * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < s.w.size(); ++i) {
        acc += s.w[i];
        if (target <= acc) return i;
    }
    return s.w.size() - 1;
}

void fixed_share_step(CombinerState& s) {
    double total = 0.0;
    for (double w : s.w) total += w;
    const double pool = s.share * total / static_cast<double>(s.w.size());
    for (double& w : s.w) w = (1.0 - s.share) * w + pool;
}

void combiner_step(CombinerState& s, const std::vector<double>& costs) {
    if (costs.size() != s.w.size())
        throw std::invalid_argument("combiner_step: cost vector size mismatch");
    for (std::size_t i = 0; i < s.w.size(); ++i)
        s.w[i] *= std::exp(-s.eta * costs[i]);
    if (s.share > 0.0) fixed_share_step(s);
    double total = 0.0;
    for (double w : s.w) total += w;
    if (total <= 0.0) throw std::runtime_error("combiner_step: weights vanished");
    for (double& w : s.w) w /= total;
}

}  // namespace dpm
