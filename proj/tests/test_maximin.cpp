#include "diamond/maximin.hpp"
#include "diamond/prng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace diamond;

TEST_CASE("maximin worked examples") {
    // min{lambda, 1-lambda} peaks at the crossing
    {
        const AffineFamily f = {{1, 0}, {-1, 1}};
        const auto r = maximin(f);
        CHECK(r.lambda1 == doctest::Approx(0.5));
        CHECK(r.value == doctest::Approx(0.5));
    }
    // both lines decreasing: optimum at the left endpoint (grid-checked)
    {
        const AffineFamily f = {{-1, 3}, {-3, 4}};
        const auto r = maximin(f);
        CHECK(r.lambda1 == doctest::Approx(0.0));
        CHECK(r.value == doctest::Approx(3.0));
    }
    // single increasing line: right endpoint
    {
        const AffineFamily f = {{2, 1}};
        const auto r = maximin(f);
        CHECK(r.lambda1 == doctest::Approx(1.0));
        CHECK(r.value == doctest::Approx(3.0));
    }
    CHECK_THROWS_AS(maximin(AffineFamily{}), std::invalid_argument);
}

TEST_CASE("maximin matches a dense grid on random families") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        AffineFamily f;
        const int m = 1 + static_cast<int>(rng.uniform() * 6);
        for (int i = 0; i < m; ++i) f.push_back({rng.uniform(-10, 10), rng.uniform(-10, 10)});
        const auto exact = maximin(f);
        const auto grid = oracles::grid_maximin(f, 1000000);
        CHECK(std::abs(exact.value - grid.value) <= 1e-6);
    }
}

TEST_CASE("maximin is invariant under dominated lines and permutation") {
    SplitMix64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        AffineFamily f;
        const int m = 2 + static_cast<int>(rng.uniform() * 5);
        for (int i = 0; i < m; ++i) f.push_back({rng.uniform(-10, 10), rng.uniform(-10, 10)});
        const auto base = maximin(f);

        // a line sitting above an existing one at both endpoints cannot matter
        const AffineLine& ref = f[static_cast<std::size_t>(rng.uniform() * m)];
        const double lift = rng.uniform(0, 3);
        AffineFamily with_dom = f;
        with_dom.push_back({ref.slope, ref.intercept + lift});
        const auto dom = maximin(with_dom);
        CHECK(dom.value == doctest::Approx(base.value).epsilon(1e-12));
        CHECK(dom.lambda1 == doctest::Approx(base.lambda1).epsilon(1e-12));

        AffineFamily shuffled = f;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[static_cast<std::size_t>(rng.uniform() * i)]);
        const auto perm = maximin(shuffled);
        CHECK(perm.value == doctest::Approx(base.value).epsilon(1e-12));
        CHECK(perm.lambda1 == doctest::Approx(base.lambda1).epsilon(1e-12));
    }
}

TEST_CASE("maximin duplicate lines are tolerated") {
    const AffineFamily f = {{1, 0}, {1, 0}, {-1, 1}};
    const auto r = maximin(f);
    CHECK(r.value == doctest::Approx(0.5));
}
