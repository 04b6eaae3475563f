#include "diamond/channel.hpp"
#include "diamond/prng.hpp"

#include <doctest.h>

#include <cmath>

using namespace diamond;

TEST_CASE("awgn_capacity known points") {
    CHECK(awgn_capacity(0.0) == 0.0);
    CHECK(awgn_capacity(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(awgn_capacity(3.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(awgn_capacity(-0.1), std::domain_error);
    CHECK_THROWS_AS(awgn_capacity(std::nan("")), std::domain_error);
}

TEST_CASE("db conversions") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(db_to_linear(30.0) == doctest::Approx(1000.0).epsilon(1e-13));
    CHECK_THROWS_AS(db_to_linear(std::numeric_limits<double>::infinity()), std::domain_error);

    SplitMix64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double x = std::exp(rng.uniform(-20, 20));
        CHECK(db_to_linear(linear_to_db(x)) == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("awgn_capacity is increasing and concave") {
    SplitMix64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        double a = rng.uniform(0, 1000), b = rng.uniform(0, 1000);
        if (a > b) std::swap(a, b);
        if (a == b) continue;
        CHECK(awgn_capacity(a) < awgn_capacity(b));
        const double mid = awgn_capacity(0.5 * (a + b));
        CHECK(mid >= 0.5 * (awgn_capacity(a) + awgn_capacity(b)) - 1e-12);
    }
}

TEST_CASE("validation accepts zeros and rejects bad values") {
    LinkGains zero{};
    CHECK_NOTHROW(zero.validate());
    LinkGains bad{1.0, -1.0, 0.0, 0.0};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    ConferencingCapacities c{0.0, 0.0};
    CHECK_NOTHROW(c.validate());
    TimeShare t{0.25};
    CHECK_NOTHROW(t.validate());
    CHECK(t.lambda2() == doctest::Approx(0.75));
    CHECK(t.lambda1 + t.lambda2() == 1.0);
    TimeShare t2{1.5};
    CHECK_THROWS_AS(t2.validate(), std::domain_error);
}
