#include <doctest.h>

#include <cmath>

#include "dpm/baselines.hpp"
#include "dpm/numeric.hpp"

using namespace dpm;

TEST_CASE("ftp buys iff the prediction reaches break-even") {
    CHECK(ftp(2.0).atom_zero == 1.0);
    CHECK(ftp(1.0).atom_zero == 1.0);  // tie buys
    CHECK(ftp(0.5).atom_infinity == 1.0);
    // (1,1)-competitive: cost <= opt + |tau - x|
    for (double tau : {0.0, 0.5, 1.0, 2.0})
        for (double x = 0.0; x <= 4.0; x += 0.05)
            CHECK(expected_cost(ftp(tau), x) <=
                  std::min(x, 1.0) + std::abs(tau - x) + 1e-12);
}

TEST_CASE("deterministic break-even rule") {
    const auto d = det_breakeven();
    CHECK(expected_cost(d, 1.0) == 2.0);
    CHECK(expected_cost(d, 0.5) == 0.5);
    CHECK(expected_cost(d, 2.0) == 2.0);
    for (double x = 0.01; x <= 5.0; x += 0.05)
        CHECK(expected_cost(d, x) <= 2.0 * std::min(x, 1.0) + 1e-12);
}

TEST_CASE("classical randomized rule") {
    const auto d = rand_classic();
    CHECK(d.total_mass() == doctest::Approx(1.0).epsilon(1e-15));
    for (double x = 0.0; x <= 5.0; x += 0.05)
        CHECK(expected_cost(d, x) <= kRhoMax * std::min(x, 1.0) + 1e-9);
}

TEST_CASE("prediction-scaled randomized baseline") {
    // anchor: lambda = ln(3/2) has consistency 1.216
    CHECK(psk_consistency(std::log(1.5)) ==
          doctest::Approx(1.216395324324493).epsilon(1e-12));
    CHECK(psk_lambda_for(1.216395324324493) ==
          doctest::Approx(std::log(1.5)).epsilon(1e-9));
    // lambda = 1 recovers the classical distribution
    const auto full = psk_rand(2.0, 1.0);
    const auto classic = rand_classic();
    for (double t = 0.0; t <= 1.0; t += 0.05)
        CHECK(cdf_eval(full, t) == doctest::Approx(cdf_eval(classic, t)).epsilon(1e-12));
    // support endpoints
    CHECK(psk_rand(2.0, 0.5).segments[0].hi == 0.5);
    CHECK(psk_rand(0.2, 0.5).segments[0].hi == 2.0);
    CHECK(psk_rand(0.2, 0.5).total_mass() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(psk_rand(1.0, 1.5), std::domain_error);
    // consistency realized: perfect buy prediction, season past break-even
    const double lam = std::log(1.5);
    CHECK(expected_cost(psk_rand(2.0, lam), 2.0) ==
          doctest::Approx(psk_consistency(lam)).epsilon(1e-12));
}

TEST_CASE("deterministic prediction-scaled baseline") {
    // robustness-2 setting reduces to the break-even rule
    const auto r2 = adjkr_det(2.0, 1.0);
    REQUIRE(r2.cutoff.has_value());
    CHECK(r2.cutoff->time == 1.0);
    // consistency rho: buy time rho - 1 when the prediction says buy
    const double rho = 1.3;
    const auto d = adjkr_det(2.0, adjkr_lambda_for(rho));
    CHECK(d.cutoff->time == doctest::Approx(0.3).epsilon(1e-15));
    for (double x = 0.01; x <= 3.0; x += 0.01)
        CHECK(expected_cost(d, x) / std::min(x, 1.0) <= 1.0 / adjkr_lambda_for(rho) + 1.0 + 1e-9);
    // rent-side threshold
    CHECK(adjkr_det(0.2, 0.5).cutoff->time == 2.0);
    CHECK(adjkr_det(0.2, 0.0).atom_infinity == 1.0);
}
