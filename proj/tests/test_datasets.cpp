#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "dpm/datasets.hpp"

using namespace dpm;

namespace {
std::string tmp_path(const char* name) {
    return std::string("dpm_test_") + name;
}
}  // namespace

TEST_CASE("uniform generation") {
    const auto ds = gen_uniform(10000, 4.0, 123);
    REQUIRE(ds.lengths.size() == 10000);
    double mean = 0.0, mx = 0.0;
    for (double l : ds.lengths) {
        CHECK(l >= 0.0);
        mx = std::max(mx, l);
        mean += l;
    }
    mean /= 10000;
    CHECK(std::abs(mean - 2.0) < 0.07);  // 3 sigma CLT bound
    CHECK(mx <= 4.0);
    // reproducible
    CHECK(gen_uniform(10, 4.0, 123).lengths == gen_uniform(10, 4.0, 123).lengths);
    CHECK(gen_uniform(1, 4.0, 5).lengths[0] <= 4.0);
}

TEST_CASE("idle extraction and rescaling") {
    CHECK(extract_idle({0.0, 1.0, 3.0}) == std::vector<double>{1.0, 2.0});
    CHECK(extract_idle({5.0}).empty());
    CHECK(extract_idle({1.0, 1.0, 2.0}) == std::vector<double>{1.0});
    const auto r = rescale({0.001, 0.003}, 2.0);
    CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rescale({}, 2.0).empty());
    const auto same = rescale({1.0, 3.0}, 2.0);
    CHECK(same[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trace loading") {
    const auto path = tmp_path("trace.csv");
    {
        std::ofstream f(path);
        f << "3.5,w\n1.0,r\n2.25,r\n";
    }
    TraceFormat fmt;  // comma, column 0, seconds
    const auto ts = load_trace(path, fmt);
    CHECK(ts == std::vector<double>{1.0, 2.25, 3.5});
    // unit conversion (milliseconds)
    fmt.unit = 1e-3;
    CHECK(load_trace(path, fmt)[0] == doctest::Approx(1e-3));
    // column selection with whitespace delimiter
    const auto path2 = tmp_path("trace.txt");
    {
        std::ofstream f(path2);
        f << "r 10.0\nw 20.0\n";
    }
    TraceFormat ws{' ', 1, 1.0};
    CHECK(load_trace(path2, ws) == std::vector<double>{10.0, 20.0});
    // errors carry the line number
    const auto bad = tmp_path("trace_bad.csv");
    {
        std::ofstream f(bad);
        f << "1.0,r\nnope,w\n";
    }
    CHECK_THROWS_WITH_AS(load_trace(bad, TraceFormat{}),
                         doctest::Contains("line 2"), std::runtime_error);
    const auto empty = tmp_path("trace_empty.csv");
    { std::ofstream f(empty); }
    CHECK_THROWS_AS(load_trace(empty, TraceFormat{}), std::runtime_error);
    std::remove(path.c_str());
    std::remove(path2.c_str());
    std::remove(bad.c_str());
    std::remove(empty.c_str());
}

TEST_CASE("jsonl round trip") {
    IdleDataset ds;
    ds.lengths = {0.12345678901234567, 2.0, 3.5};
    ds.predictions = {0.1, 2.5, 0.0};
    ds.source = "unit-test";
    ds.seed = 42;
    ds.scale = 1.5;
    const auto path = tmp_path("ds.jsonl");
    save_dataset(ds, path);
    const auto back = load_dataset(path);
    CHECK(back.source == ds.source);
    CHECK(back.seed == ds.seed);
    CHECK(back.scale == ds.scale);
    REQUIRE(back.lengths.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back.lengths[i] == doctest::Approx(ds.lengths[i]).epsilon(1e-15));
        CHECK(back.predictions[i] == doctest::Approx(ds.predictions[i]).epsilon(1e-15));
    }
    std::remove(path.c_str());
}
