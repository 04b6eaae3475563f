#include "diamond/df_strategy1.hpp"

#include "diamond/prng.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace diamond;

namespace {

// capacities exactly (4,1,1,4): gamma = 2^C - 1
const LinkGains kAsym{15.0, 1.0, 1.0, 15.0};

LinkGains random_gains(SplitMix64& rng) {
    return {db_to_linear(rng.uniform(-10, 30)), db_to_linear(rng.uniform(-10, 30)),
            db_to_linear(rng.uniform(-10, 30)), db_to_linear(rng.uniform(-10, 30))};
}

} // namespace

TEST_CASE("upper_bound_I worked examples") {
    // all capacities 2, conferencing 2: the flat first two terms pin the bound
    {
        const auto u = upper_bound_I({3, 3, 3, 3}, {2, 2});
        CHECK(u.value == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(u.share.lambda1 == doctest::Approx(0.0)); // smallest maximizer wins ties
    }
    {
        const auto u = upper_bound_I(kAsym, {1, 1});
        CHECK(u.value == doctest::Approx(2.2).epsilon(1e-12));
        CHECK(u.share.lambda1 == doctest::Approx(0.4).epsilon(1e-12));
    }
    // zero conferencing, symmetric gains: bound equals the single-link capacity
    {
        const auto u = upper_bound_I({3, 3, 3, 3}, {0, 0});
        CHECK(u.value == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(u.share.lambda1 == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("df_rate_lp worked examples") {
    {
        const auto d = df_rate_lp(kAsym, {1, 1});
        CHECK(d.rate == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(d.active_link == ConferencingLink::relay1_to_relay2);
        CHECK(d.allocation.r12 == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
        CHECK(d.allocation.r21 == doctest::Approx(0.0));
    }
    {
        // no conferencing: this is the plain alternative-relaying DF rate
        const auto d = df_rate_lp(kAsym, {0, 0});
        CHECK(d.rate == doctest::Approx(1.6).epsilon(1e-9));
        CHECK(d.share.lambda1 == doctest::Approx(0.2).epsilon(1e-9));
        CHECK(d.active_link == ConferencingLink::none);
    }
    {
        // all-zero gains collapse to zero rate instead of failing
        const auto d = df_rate_lp({0, 0, 0, 0}, {3, 3});
        CHECK(d.rate == doctest::Approx(0.0));
    }
}

TEST_CASE("df solution internal consistency") {
    SplitMix64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const LinkGains g = random_gains(rng);
        const ConferencingCapacities conf{rng.uniform(0, 10), rng.uniform(0, 10)};
        const auto d = df_rate_lp(g, conf);
        CHECK(std::abs(d.rate - d.allocation.sum()) <= 1e-9);
        CHECK((d.allocation.r12 <= 1e-9 || d.allocation.r21 <= 1e-9));
        if (d.active_link == ConferencingLink::relay1_to_relay2) CHECK(d.allocation.r12 > 1e-9);
        if (d.active_link == ConferencingLink::relay2_to_relay1) CHECK(d.allocation.r21 > 1e-9);
        if (d.active_link == ConferencingLink::none) {
            CHECK(d.allocation.r12 <= 1e-9);
            CHECK(d.allocation.r21 <= 1e-9);
        }
        CHECK(d.share.lambda1 >= 0.0);
        CHECK(d.share.lambda1 <= 1.0);
    }
}

TEST_CASE("closed form equals the LP and the greedy-grid oracle") {
    SplitMix64 rng(42);
    double worst = 0.0;
    for (int i = 0; i < 1500; ++i) {
        const LinkGains g = random_gains(rng);
        const ConferencingCapacities conf{rng.uniform(0, 10), rng.uniform(0, 10)};
        const auto cf = df_rate_closed_form(g, conf);
        CHECK_FALSE(cf.lp_mismatch);
        worst = std::max(worst, std::abs(cf.solution.rate - cf.lp_value));
        const double oracle = oracles::df_grid_greedy(g, conf, false, 2000);
        CHECK(std::abs(cf.solution.rate - oracle) <= 1e-6);
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("closed form worked example with k1 binding") {
    const auto cf = df_rate_closed_form(kAsym, {1.0, 0.0});
    CHECK(cf.breakpoints.k1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(cf.solution.rate == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(cf.solution.active_link == ConferencingLink::relay1_to_relay2);
    CHECK(cf.solution.allocation.r12 == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("symmetric channels gain nothing from conferencing") {
    SplitMix64 rng(43);
    for (int i = 0; i < 200; ++i) {
        const double g = db_to_linear(rng.uniform(-10, 30));
        const double gt = db_to_linear(rng.uniform(-10, 30));
        const LinkGains sym{g, g, gt, gt};
        const ConferencingCapacities conf{rng.uniform(0, 10), rng.uniform(0, 10)};
        const double with = df_rate_lp(sym, conf).rate;
        const double without = df_rate_lp(sym, {0, 0}).rate;
        CHECK(std::abs(with - without) <= 1e-9);
        // the closed form routes these to the no-conferencing branch
        const auto cf = df_rate_closed_form(sym, conf);
        CHECK(cf.solution.active_link == ConferencingLink::none);
    }
}

TEST_CASE("zero conferencing rates reproduce the no-conferencing rate") {
    SplitMix64 rng(44);
    for (int i = 0; i < 100; ++i) {
        const LinkGains g = random_gains(rng);
        const auto cf = df_rate_closed_form(g, {0, 0});
        CHECK_FALSE(cf.lp_mismatch);
        CHECK(cf.breakpoints.k1 == doctest::Approx(0.0));
        CHECK(cf.breakpoints.ktilde1 == doctest::Approx(0.0));
        CHECK(cf.solution.active_link == ConferencingLink::none);
    }
}

TEST_CASE("one-side conferencing is optimal") {
    SplitMix64 rng(45);
    for (int i = 0; i < 300; ++i) {
        const LinkGains g = random_gains(rng);
        const ConferencingCapacities conf{rng.uniform(0, 10), rng.uniform(0, 10)};
        const double full = df_rate_lp(g, conf).rate;
        const double one =
            std::max(df_rate_lp_one_side(g, conf, ConferencingLink::relay1_to_relay2).rate,
                     df_rate_lp_one_side(g, conf, ConferencingLink::relay2_to_relay1).rate);
        CHECK(std::abs(full - one) <= 1e-9);
    }
}

TEST_CASE("closed-form optimum carries a tight constraint-pair certificate") {
    SplitMix64 rng(46);
    for (int i = 0; i < 300; ++i) {
        const LinkGains g = random_gains(rng);
        const ConferencingCapacities conf{rng.uniform(0, 10), rng.uniform(0, 10)};
        const auto cf = df_rate_closed_form(g, conf);
        const double c1 = awgn_capacity(g.gamma1), c2 = awgn_capacity(g.gamma2);
        const double ct1 = awgn_capacity(g.gtilde1), ct2 = awgn_capacity(g.gtilde2);
        const double l1 = cf.solution.share.lambda1, l2 = 1.0 - l1;
        bool tight = false;
        if (cf.solution.active_link != ConferencingLink::relay2_to_relay1) {
            const double t = cf.solution.allocation.r12;
            tight = std::abs(l1 * c1 - t - l2 * ct1) <= 1e-6 ||
                    std::abs(l1 * ct2 - t - l2 * c2) <= 1e-6;
        }
        if (!tight) {
            const double t = cf.solution.allocation.r21;
            tight = std::abs(l2 * c2 - t - l1 * ct2) <= 1e-6 ||
                    std::abs(l2 * ct1 - t - l1 * c1) <= 1e-6;
        }
        CHECK(tight);
        // and the certified point really is LP-optimal
        CHECK(std::abs(cf.solution.rate - cf.lp_value) <= 1e-6);
    }
}

TEST_CASE("select_conferencing_link follows the gain orderings") {
    CHECK(select_conferencing_link(kAsym) == ConferencingLink::relay1_to_relay2);
    CHECK(select_conferencing_link({1, 15, 15, 1}) == ConferencingLink::relay2_to_relay1);
    CHECK(select_conferencing_link({3, 3, 7, 7}) == ConferencingLink::none);
    // mixed orderings dispatch on the capacity products; equal products mean
    // conferencing cannot help
    CHECK(select_conferencing_link({15, 1, 15, 1}) == ConferencingLink::none);
    CHECK(select_conferencing_link({15, 1, 31, 3}) == ConferencingLink::relay1_to_relay2);
    CHECK(select_conferencing_link({31, 3, 15, 1}) == ConferencingLink::relay2_to_relay1);
}

TEST_CASE("selected link agrees with the LP's active link") {
    SplitMix64 rng(47);
    for (int i = 0; i < 300; ++i) {
        const LinkGains g = random_gains(rng);
        const ConferencingCapacities conf{rng.uniform(0.5, 10), rng.uniform(0.5, 10)};
        const auto d = df_rate_lp(g, conf);
        const auto sel = select_conferencing_link(g);
        // when the LP actually uses a link, it is the advised one
        if (d.active_link != ConferencingLink::none) CHECK(d.active_link == sel);
    }
}

TEST_CASE("asymptotic limit") {
    CHECK(asymptotic_df_limit(kAsym) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(asymptotic_df_limit({3, 3, 3, 3}) == doctest::Approx(2.0).epsilon(1e-12));
    SplitMix64 rng(48);
    for (int i = 0; i < 100; ++i) {
        const double a = db_to_linear(rng.uniform(-10, 30));
        const double b = db_to_linear(rng.uniform(-10, 30));
        // equal first-hop and equal second-hop capacities: both terms constant
        CHECK(asymptotic_df_limit({a, a, b, b}) ==
              doctest::Approx(std::min(awgn_capacity(a), awgn_capacity(b))).epsilon(1e-12));
    }
}

TEST_CASE("sandwich and monotonicity spot checks") {
    SplitMix64 rng(49);
    for (int i = 0; i < 200; ++i) {
        const LinkGains g = random_gains(rng);
        const ConferencingCapacities conf{rng.uniform(0, 10), rng.uniform(0, 10)};
        const double df = df_rate_lp(g, conf).rate;
        CHECK(df <= upper_bound_I(g, conf).value + 1e-9);
        CHECK(df_rate_lp(g, {conf.c12 + 1.0, conf.c21}).rate >= df - 1e-9);
        CHECK(df_rate_lp(g, {conf.c12, conf.c21 + 1.0}).rate >= df - 1e-9);
        LinkGains g2 = g;
        g2.gamma1 *= 1.5;
        CHECK(df_rate_lp(g2, conf).rate >= df - 1e-9);
    }
}
