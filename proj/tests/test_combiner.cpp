#include <doctest.h>

#include <cmath>

#include "dpm/combiner.hpp"
#include "dpm/numeric.hpp"
#include "dpm/ski_rental.hpp"

using namespace dpm;

TEST_CASE("rho grid structure") {
    const auto g = build_rho_grid(0.05);
    REQUIRE(g.size() >= 3);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == kRhoMax);
    bool has_tilde = false;
    for (double r : g) has_tilde |= std::abs(r - rho_tilde()) < 1e-12;
    CHECK(has_tilde);
    // sorted, in range
    for (std::size_t i = 0; i + 1 < g.size(); ++i) CHECK(g[i] < g[i + 1] + 1e-15);
    // interior points below the crossing sit on the (1 + i*eps) mu ladder
    const double mt = mu_tilde();
    int i = 0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
        if (*it >= rho_tilde() - 1e-12 || *it == 1.0) continue;
        ++i;
        CHECK(mu_of_rho(*it) == doctest::Approx((1.0 + i * 0.05) * mt).epsilon(1e-8));
    }
    CHECK(i == static_cast<int>((1.0 - mt) / (mt * 0.05)));
}

TEST_CASE("equal costs keep weights uniform") {
    auto s = combiner_init(4, 0.1);
    for (int t = 0; t < 50; ++t) combiner_step(s, {2.0, 2.0, 2.0, 2.0});
    for (double w : s.w) CHECK(w == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("single expert is charged exactly") {
    auto s = combiner_init(1, 0.1);
    CHECK(combiner_choose(s, 0.0) == 0);
    CHECK(combiner_choose(s, 1.0) == 0);
    combiner_step(s, {3.0});
    CHECK(s.w[0] == doctest::Approx(1.0));
}

TEST_CASE("weights concentrate on the cheapest expert") {
    auto s = combiner_init(3, 0.1);
    for (int t = 0; t < 100; ++t) combiner_step(s, {0.0, 5.0, 5.0});
    CHECK(s.w[0] > 1.0 - 1e-12);
    CHECK(combiner_choose(s, 0.999999) == 0);
}

TEST_CASE("probability matching respects the weights") {
    CombinerState s;
    s.w = {0.5, 0.3, 0.2};
    CHECK(combiner_choose(s, 0.0) == 0);
    CHECK(combiner_choose(s, 0.49) == 0);
    CHECK(combiner_choose(s, 0.51) == 1);
    CHECK(combiner_choose(s, 0.81) == 2);
    CHECK(combiner_choose(s, 1.0) == 2);
}

TEST_CASE("fixed share mixing") {
    // share 1 resets to uniform regardless of costs
    auto s = combiner_init(2, 0.5, 1.0);
    combiner_step(s, {0.0, 10.0});
    CHECK(s.w[0] == doctest::Approx(0.5).epsilon(1e-12));
    // share 0 equals the plain update
    auto a = combiner_init(2, 0.5, 0.0);
    auto b = combiner_init(2, 0.5);
    combiner_step(a, {1.0, 2.0});
    combiner_step(b, {1.0, 2.0});
    CHECK(a.w[0] == doctest::Approx(b.w[0]).epsilon(1e-15));
    // share keeps every weight bounded away from zero
    auto c = combiner_init(2, 0.5, 0.1);
    for (int t = 0; t < 500; ++t) combiner_step(c, {0.0, 10.0});
    CHECK(c.w[1] >= 0.1 / 2 * 0.9 - 1e-12);
}

TEST_CASE("fixed share tracks a switch") {
    // expert A cheap for the first half, B for the second
    auto tracked = combiner_init(2, 0.5, 0.05);
    auto plain = combiner_init(2, 0.5, 0.0);
    double cost_tracked = 0.0, cost_plain = 0.0;
    for (int t = 0; t < 2000; ++t) {
        const std::vector<double> c =
            (t < 1000) ? std::vector<double>{0.0, 1.0} : std::vector<double>{1.0, 0.0};
        // expected charged cost under probability matching
        double wt = tracked.w[0] * c[0] + tracked.w[1] * c[1];
        double wp = plain.w[0] * c[0] + plain.w[1] * c[1];
        cost_tracked += wt;
        cost_plain += wp;
        combiner_step(tracked, c);
        combiner_step(plain, c);
    }
    CHECK(cost_tracked < cost_plain);
    // the best switching sequence pays 0; tracking overhead stays small
    CHECK(cost_tracked < 0.2 * cost_plain);
    CHECK(cost_tracked < 200.0);
}
