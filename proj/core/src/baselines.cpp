#include "dpm/baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "dpm/numeric.hpp"

namespace dpm {

BuyDistribution ftp(double tau) {
    BuyDistribution d;
    d.prediction = tau;
    if (tau >= 1.0)
        d.atom_zero = 1.0;
    else
        d.atom_infinity = 1.0;
    return d;
}

BuyDistribution det_breakeven() {
    BuyDistribution d;
    d.cutoff = CutoffAtom{1.0, 1.0};
    return d;
}

BuyDistribution rand_classic() {
    return build_cdf_unchecked(kRhoMax, 0.0, 0.0);
}

BuyDistribution psk_rand(double tau, double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw std::domain_error("psk_rand: lambda must lie in (0, 1]");
    BuyDistribution d;
    d.prediction = tau;
    const double hi = (tau >= 1.0) ? lambda : 1.0 / lambda;
    d.segments.push_back({0.0, hi, 1.0 / std::expm1(hi)});
    return d;
}

double psk_consistency(double lambda) {
    return lambda / (-std::expm1(-lambda));
}

double psk_lambda_for(double rho) {
    // Floor keeps 1/lambda out of exp-overflow territory; the consistency at
    // the floor is within 1e-3 of 1.
    constexpr double kFloor = 0.002;
    if (rho <= psk_consistency(kFloor)) return kFloor;
    if (rho >= psk_consistency(1.0)) return 1.0;
    return bisect([rho](double l) { return psk_consistency(l) - rho; }, kFloor, 1.0);
}

BuyDistribution adjkr_det(double tau, double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw std::domain_error("adjkr_det: lambda must lie in [0, 1]");
    if (lambda == 0.0) return ftp(tau);
    BuyDistribution d;
    d.prediction = tau;
    d.cutoff = CutoffAtom{(tau >= 1.0) ? lambda : 1.0 / lambda, 1.0};
    return d;
}

double adjkr_lambda_for(double rho) { return rho - 1.0; }

}  // namespace dpm
