#include <doctest.h>

#include <cmath>

#include "dpm/predictors.hpp"
#include "dpm/rng.hpp"

using namespace dpm;

TEST_CASE("noisy predictions") {
    CHECK(noisy_prediction(1.5, 0.0, 0.37) == 1.5);
    CHECK(noisy_prediction(1.0, 2.0, -1.0) == 0.0);
    CHECK(noisy_prediction(2.0, 0.5, 1.0) == 2.5);
}

TEST_CASE("share predictor grid and initial prediction") {
    const auto s = make_share_predictor(4.0);
    REQUIRE(s.durations.size() == 64);
    CHECK(s.durations.front() == doctest::Approx(0.04).epsilon(1e-12));
    CHECK(s.durations.back() == doctest::Approx(16.0).epsilon(1e-12));
    for (std::size_t i = 0; i + 1 < s.durations.size(); ++i)
        CHECK(s.durations[i] < s.durations[i + 1]);
    // uniform weights: weighted median = grid median
    const double p = share_predict(s);
    CHECK(p >= s.durations[30]);
    CHECK(p <= s.durations[33]);
}

TEST_CASE("good variant locks on a constant stream") {
    auto s = make_share_predictor(4.0, 0.5);
    const double target = 1.0;
    for (int t = 0; t < 500; ++t) share_update(s, target);
    const double p = share_predict(s);
    // within one grid step of the target
    const double step = s.durations[1] / s.durations[0];
    CHECK(p <= target * step);
    CHECK(p >= target / step);
}

TEST_CASE("bad variant drifts away") {
    auto good = make_share_predictor(4.0, 0.5);
    auto bad = make_share_predictor(4.0, -0.5);
    const double target = 1.0;
    for (int t = 0; t < 500; ++t) {
        share_update(good, target);
        share_update(bad, target);
    }
    CHECK(std::abs(share_predict(bad) - target) >
          std::abs(share_predict(good) - target));
    // cumulative error comparison on an i.i.d. stream
    Rng rng(11);
    auto g2 = make_share_predictor(4.0, 0.5);
    auto b2 = make_share_predictor(4.0, -0.5);
    double eg = 0.0, eb = 0.0;
    for (int t = 0; t < 2000; ++t) {
        const double l = rng.uniform(0.0, 4.0);
        eg += std::abs(share_predict(g2) - l);
        eb += std::abs(share_predict(b2) - l);
        share_update(g2, l);
        share_update(b2, l);
    }
    CHECK(eg < eb);
}

TEST_CASE("predictions stay non-negative and weights positive") {
    auto s = make_share_predictor(4.0, 0.5);
    Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        share_update(s, rng.uniform(0.0, 8.0));
        CHECK(share_predict(s) >= 0.0);
        for (double w : s.weights) CHECK(w > 0.0);
    }
}
