#include "diamond/df_strategy2.hpp"

#include "df_internal.hpp"
#include "diamond/maximin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace diamond {

namespace {

struct CapSet {
    double c1, c2, ct1, ct2;
};

CapSet caps_of(const LinkGains& g) {
    return {awgn_capacity(g.gamma1), awgn_capacity(g.gamma2),
            awgn_capacity(g.gtilde1), awgn_capacity(g.gtilde2)};
}

// lambda-interval on [0,1] where slope*l + intercept >= level (within tol).
struct Interval {
    double lo = 0.0, hi = 1.0;
};

Interval geq_interval(const AffineLine& line, double level) {
    if (std::abs(line.slope) <= 1e-12) {
        // constant line; it is >= level everywhere (the maximin value cannot
        // exceed a constant member of the family)
        return {0.0, 1.0};
    }
    const double t = (level - line.intercept) / line.slope;
    if (line.slope > 0.0) return {std::clamp(t, 0.0, 1.0), 1.0};
    return {0.0, std::clamp(t, 0.0, 1.0)};
}

int classify_case(const LinkGains& g) {
    const double g1 = g.gamma1, g2 = g.gamma2, t1 = g.gtilde1, t2 = g.gtilde2;
    if (g1 > g2 && t2 > t1) return 1;
    if (g1 <= g2 && t2 <= t1) return 2;
    if (g1 > g2 && t1 <= t2 && t2 >= g1) return 3;
    if (g1 <= g2 && t1 > t2 && t2 <= g1) return 4;
    if (g1 > g2 && t1 > t2 && g1 > t2) return 5;
    if (g1 <= g2 && t1 < t2 && g1 < t2) return 6;
    return 0;
}

} // namespace

UpperBound upper_bound_II(const LinkGains& gains, const ConferencingCapacities& conf) {
    gains.validate();
    conf.validate();
    const CapSet c = caps_of(gains);
    const double s = conf.c12 + conf.c21;
    const std::array<AffineLine, 4> lines = {{
        {c.c1 - c.c2, c.c2},
        {c.ct2 - c.ct1, c.ct1},
        {-(c.c2 + c.ct1), c.c2 + c.ct1 + s},
        {c.c1 + c.ct2, s},
    }};
    const MaximinResult r = maximin(lines);
    return {r.value, {r.lambda1}};
}

DfSolution df_rate_II(const LinkGains& gains, const ConferencingCapacities& conf) {
    gains.validate();
    conf.validate();
    return detail::solve_df_lp(gains, conf, true, true, /*strategyII=*/true);
}

LinearProgram build_p3(const LinkGains& gains, const ConferencingCapacities& conf) {
    const CapSet c = caps_of(gains);
    LinearProgram lp;
    lp.objective = {1, 1, 1, 1, 0, 0};
    lp.nonneg.assign(6, true);
    lp.constraints.push_back({{0, 0, 1, 0, 0, 0}, conf.c21});
    lp.constraints.push_back({{0, 1, 0, 0, 0, 0}, conf.c12});
    lp.constraints.push_back({{1, 1, 0, 0, -c.c1, 0}, 0.0});
    lp.constraints.push_back({{0, 0, 1, 1, 0, -c.c2}, 0.0});
    lp.constraints.push_back({{0, 1, 0, 1, -c.ct2, 0}, 0.0});
    lp.constraints.push_back({{1, 0, 1, 0, 0, -c.ct1}, 0.0});
    lp.equalities.push_back({{0, 0, 0, 0, 1, 1}, 1.0});
    return lp;
}

ThresholdReport min_conferencing_for_capacity(const LinkGains& gains) {
    gains.validate();
    const CapSet c = caps_of(gains);
    const AffineLine f1{c.c1 - c.c2, c.c2};
    const AffineLine f2{c.ct2 - c.ct1, c.ct1};
    const std::array<AffineLine, 2> lines = {{f1, f2}};
    const MaximinResult mm = maximin(lines);
    const double V = mm.value;

    // The bound is evaluated at the maximizer of the two-term bound that
    // leaves the most conferencing credit, i.e. the one maximizing
    // g(l) = min{(1-l)(C(g2)+C(gt1)), l(C(g1)+C(gt2))} over the argmax set.
    const Interval i1 = geq_interval(f1, V);
    const Interval i2 = geq_interval(f2, V);
    const double lo = std::max(i1.lo, i2.lo);
    const double hi = std::min(i1.hi, i2.hi);

    const double a = c.c2 + c.ct1;
    const double b = c.c1 + c.ct2;
    auto g_of = [&](double l) { return std::min((1.0 - l) * a, l * b); };
    const double peak = (a + b) > 0.0 ? a / (a + b) : 0.5;
    double lstar = std::clamp(peak, std::min(lo, hi), std::max(lo, hi));

    ThresholdReport rep;
    rep.case_id = classify_case(gains);
    if (rep.case_id == 5 || rep.case_id == 6) {
        // lambda0 as tabulated for the crossing cases; fall back to the
        // maximin interval when it is degenerate or escapes [0,1].
        const double den = c.ct2 - c.ct1 - c.c1 + c.c2;
        if (std::abs(den) > 1e-12) {
            const double lam0 = (c.c2 - c.ct1) / den;
            if (lam0 >= 0.0 && lam0 <= 1.0 &&
                std::abs(std::min(f1.slope * lam0 + f1.intercept,
                                  f2.slope * lam0 + f2.intercept) - V) <= 1e-9)
                lstar = lam0;
        }
    }

    rep.ctilde_upper = V;
    rep.lambda_star = lstar;
    rep.min_conf_sum = std::max(V - g_of(lstar), 0.0);
    rep.g_value = V - rep.min_conf_sum; // g capped so the bound stays >= 0
    return rep;
}

bool verify_prop6(const LinkGains& gains, double c) {
    if (!std::isfinite(c) || c < 0.0)
        throw std::domain_error("verify_prop6: conferencing rate must be finite and >= 0");
    const ConferencingCapacities conf{c, c};
    const double df = df_rate_II(gains, conf).rate;
    const double ub = upper_bound_I(gains, conf).value;
    return std::abs(df - ub) <= 1e-6;
}

} // namespace diamond
