#include "diamond/df_strategy1.hpp"

#include "df_internal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace diamond {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLinkTol = 1e-9;

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

struct CapSet {
    double c1, c2, ct1, ct2; // awgn capacities of gamma1, gamma2, gtilde1, gtilde2
};

CapSet caps_of(const LinkGains& g) {
    return {awgn_capacity(g.gamma1), awgn_capacity(g.gamma2),
            awgn_capacity(g.gtilde1), awgn_capacity(g.gtilde2)};
}

// ---- closed-form one-side subproblem (relay1 -> relay2 direction) ----
//
// With r21 = 0 the optimum pins one constraint pair tight; each pairing turns
// the subproblem into max over t = r12 in [0, k] of a minimum of two lines
// that share the slopes (c1-c2) and (ct2-ct1).

struct OneSideSolution {
    double value = 0.0;
    double t = 0.0;       // conferenced rate r12
    double lambda1 = 0.5;
    double r11 = 0.0;
    double r22 = 0.0;
};

struct OneSideBounds {
    double k1 = 0.0; // branch with lambda1*c1 - t = lambda2*ct1 tight
    double k2 = 0.0; // branch with lambda1*ct2 - t = lambda2*c2 tight
    double k3 = kInf; // crossing of the two value lines, +inf if none at t>=0
};

double guarded_ratio(double num, double den) {
    if (num <= 0.0) return 0.0;
    return den > 0.0 ? num / den : kInf;
}

OneSideBounds one_side_bounds(const CapSet& c, double c12) {
    OneSideBounds b;
    b.k1 = std::min(guarded_ratio(c.c1 * c12, c.c1 + c.ct1 + c12),
                    guarded_ratio(c.ct1 * c.ct2, c.c1 + c.ct1 - c.ct2));
    b.k2 = std::min({guarded_ratio(c.ct2 * c12, c.c2 + c.ct2 + c12),
                     guarded_ratio(c.c1 * c.c2, c.c2 + c.ct2 - c.c1),
                     c.ct2});
    const double sa = c.c1 - c.c2;
    const double sb = c.ct2 - c.ct1;
    // value lines: A + sa*t and B + sb*t with A = c1*c2, B = ct1*ct2
    const double A = c.c1 * c.c2, B = c.ct1 * c.ct2;
    if (std::abs(sa - sb) > 0.0) {
        const double cross = (B - A) / (sa - sb);
        if (cross >= 0.0) b.k3 = cross;
    }
    return b;
}

// Maximizer of min(A + sa*t, B + sb*t) over t in [0, k]: the monotone cases
// pick an endpoint, the mixed cases stop at the crossing when the increasing
// line starts below the other one.
double best_t(double sa, double sb, double A, double B, double k, double k3) {
    const bool inc_a = sa > 0.0 && !nearly_equal(sa, 0.0);
    const bool inc_b = sb > 0.0 && !nearly_equal(sb, 0.0);
    if (inc_a && inc_b) return k;
    if (!inc_a && !inc_b) return 0.0;
    if (inc_a) return (A < B && !nearly_equal(A, B)) ? std::min(k, k3) : 0.0;
    return (B < A && !nearly_equal(A, B)) ? std::min(k, k3) : 0.0;
}

// Solve P1.1 (only the relay1->relay2 link active) in closed form.
OneSideSolution solve_one_side(const CapSet& c, double c12) {
    const double sa = c.c1 - c.c2;
    const double sb = c.ct2 - c.ct1;
    const double A = c.c1 * c.c2, B = c.ct1 * c.ct2;
    const OneSideBounds kb = one_side_bounds(c, c12);
    auto minline = [&](double t) { return std::min(A + sa * t, B + sb * t); };

    OneSideSolution best;
    bool have = false;
    if (c.c1 + c.ct1 > 0.0) {
        const double t = best_t(sa, sb, A, B, kb.k1, kb.k3);
        OneSideSolution s;
        s.value = (c.c1 * c.ct1 + minline(t)) / (c.c1 + c.ct1);
        s.t = t;
        s.lambda1 = (c.ct1 + t) / (c.c1 + c.ct1);
        s.r11 = (1.0 - s.lambda1) * c.ct1;
        s.r22 = std::max(0.0, std::min(s.lambda1 * c.ct2 - t, (1.0 - s.lambda1) * c.c2));
        best = s;
        have = true;
    }
    if (c.c2 + c.ct2 > 0.0) {
        const double t = best_t(sa, sb, A, B, kb.k2, kb.k3);
        OneSideSolution s;
        s.value = (c.c2 * c.ct2 + minline(t)) / (c.c2 + c.ct2);
        s.t = t;
        s.lambda1 = (c.c2 + t) / (c.c2 + c.ct2);
        s.r22 = (1.0 - s.lambda1) * c.c2;
        s.r11 = std::max(0.0, std::min(s.lambda1 * c.c1 - t, (1.0 - s.lambda1) * c.ct1));
        if (!have || s.value > best.value + 1e-15 ||
            (std::abs(s.value - best.value) <= 1e-15 && s.lambda1 < best.lambda1)) {
            best = s;
        }
        have = true;
    }
    if (!have) best = {0.0, 0.0, 0.5, 0.0, 0.0}; // all four capacities zero
    return best;
}

DfSolution normalize_one_side(RateAllocation r, double lambda1) {
    const double m = std::min(r.r12, r.r21);
    if (m > 0.0) {
        r.r12 -= m;
        r.r21 -= m;
        r.r11 += m;
        r.r22 += m;
    }
    r.r11 = std::max(r.r11, 0.0);
    r.r12 = std::max(r.r12, 0.0);
    r.r21 = std::max(r.r21, 0.0);
    r.r22 = std::max(r.r22, 0.0);
    DfSolution s;
    s.rate = r.sum();
    s.allocation = r;
    s.share.lambda1 = std::clamp(lambda1, 0.0, 1.0);
    if (r.r12 > kLinkTol)
        s.active_link = ConferencingLink::relay1_to_relay2;
    else if (r.r21 > kLinkTol)
        s.active_link = ConferencingLink::relay2_to_relay1;
    else
        s.active_link = ConferencingLink::none;
    return s;
}

} // namespace

const char* to_string(ConferencingLink link) {
    switch (link) {
        case ConferencingLink::relay1_to_relay2: return "relay1_to_relay2";
        case ConferencingLink::relay2_to_relay1: return "relay2_to_relay1";
        default: return "none";
    }
}

UpperBound upper_bound_I(const LinkGains& gains, const ConferencingCapacities& conf) {
    gains.validate();
    conf.validate();
    const CapSet c = caps_of(gains);
    const std::array<AffineLine, 4> lines = {{
        {c.c1 - c.c2, c.c2},
        {c.ct2 - c.ct1, c.ct1},
        {conf.c21 - (c.c2 + c.ct1 + conf.c12), c.c2 + c.ct1 + conf.c12},
        {(c.c1 + c.ct2 + conf.c21) - conf.c12, conf.c12},
    }};
    const MaximinResult r = maximin(lines);
    return {r.value, {r.lambda1}};
}

LinearProgram build_p1(const LinkGains& gains, const ConferencingCapacities& conf) {
    const CapSet c = caps_of(gains);
    LinearProgram lp;
    lp.objective = {1, 1, 1, 1, 0, 0};
    lp.nonneg.assign(6, true);
    // variables: r11 r12 r21 r22 lambda1 lambda2
    lp.constraints.push_back({{0, 0, 1, 0, -conf.c21, 0}, 0.0}); // r21 <= lam1*c21
    lp.constraints.push_back({{0, 1, 0, 0, 0, -conf.c12}, 0.0}); // r12 <= lam2*c12
    lp.constraints.push_back({{1, 1, 0, 0, -c.c1, 0}, 0.0});     // first hop, relay 1
    lp.constraints.push_back({{0, 0, 1, 1, 0, -c.c2}, 0.0});     // first hop, relay 2
    lp.constraints.push_back({{0, 1, 0, 1, -c.ct2, 0}, 0.0});    // second hop via relay 2
    lp.constraints.push_back({{1, 0, 1, 0, 0, -c.ct1}, 0.0});    // second hop via relay 1
    lp.equalities.push_back({{0, 0, 0, 0, 1, 1}, 1.0});
    return lp;
}

namespace detail {

DfSolution solve_df_lp(const LinkGains& gains, const ConferencingCapacities& conf,
                       bool allow12, bool allow21, bool strategyII) {
    const CapSet c = caps_of(gains);
    const bool use12 = allow12 && conf.c12 > 0.0;
    const bool use21 = allow21 && conf.c21 > 0.0;

    // variable order: r11 [r12] [r21] r22 lambda1 lambda2
    std::vector<int> pos(4, -1); // r11,r12,r21,r22 -> column
    int n = 0;
    pos[0] = n++;
    if (use12) pos[1] = n++;
    if (use21) pos[2] = n++;
    pos[3] = n++;
    const int il1 = n++, il2 = n++;

    LinearProgram lp;
    lp.objective.assign(n, 0.0);
    for (int v = 0; v < 4; ++v)
        if (pos[v] >= 0) lp.objective[pos[v]] = 1.0;
    lp.nonneg.assign(n, true);
    auto row = [&](std::initializer_list<std::pair<int, double>> terms, double b) {
        LinearProgram::Row r;
        r.a.assign(n, 0.0);
        for (auto [col, v] : terms)
            if (col >= 0) r.a[col] = v;
        r.b = b;
        lp.constraints.push_back(r);
    };
    if (use21) {
        if (strategyII) row({{pos[2], 1.0}}, conf.c21);
        else row({{pos[2], 1.0}, {il1, -conf.c21}}, 0.0);
    }
    if (use12) {
        if (strategyII) row({{pos[1], 1.0}}, conf.c12);
        else row({{pos[1], 1.0}, {il2, -conf.c12}}, 0.0);
    }
    row({{pos[0], 1.0}, {pos[1], 1.0}, {il1, -c.c1}}, 0.0);
    row({{pos[3], 1.0}, {pos[2], 1.0}, {il2, -c.c2}}, 0.0);
    row({{pos[3], 1.0}, {pos[1], 1.0}, {il1, -c.ct2}}, 0.0);
    row({{pos[0], 1.0}, {pos[2], 1.0}, {il2, -c.ct1}}, 0.0);
    LinearProgram::Row eq;
    eq.a.assign(n, 0.0);
    eq.a[il1] = 1.0;
    eq.a[il2] = 1.0;
    eq.b = 1.0;
    lp.equalities.push_back(eq);

    const LpSolution sol = solve(lp, /*assume_bounded=*/true);
    if (sol.status != LpStatus::optimal)
        throw std::logic_error("df rate LP reported non-optimal status on valid inputs");

    RateAllocation r;
    r.r11 = sol.point[pos[0]];
    r.r12 = use12 ? sol.point[pos[1]] : 0.0;
    r.r21 = use21 ? sol.point[pos[2]] : 0.0;
    r.r22 = sol.point[pos[3]];
    return normalize_one_side(r, sol.point[il1]);
}

} // namespace detail

DfSolution df_rate_lp(const LinkGains& gains, const ConferencingCapacities& conf) {
    gains.validate();
    conf.validate();
    return detail::solve_df_lp(gains, conf, true, true, false);
}

DfSolution df_rate_lp_one_side(const LinkGains& gains, const ConferencingCapacities& conf,
                               ConferencingLink allowed) {
    gains.validate();
    conf.validate();
    return detail::solve_df_lp(gains, conf,
                               allowed == ConferencingLink::relay1_to_relay2,
                               allowed == ConferencingLink::relay2_to_relay1, false);
}

DfClosedForm df_rate_closed_form(const LinkGains& gains, const ConferencingCapacities& conf) {
    gains.validate();
    conf.validate();
    const CapSet c = caps_of(gains);
    const CapSet cm = {c.c2, c.c1, c.ct2, c.ct1}; // relay relabeling 1 <-> 2

    const OneSideSolution a = solve_one_side(c, conf.c12);
    const OneSideSolution b = solve_one_side(cm, conf.c21);

    DfClosedForm out;
    const OneSideBounds ka = one_side_bounds(c, conf.c12);
    const OneSideBounds kb = one_side_bounds(cm, conf.c21);
    out.breakpoints = {ka.k1, ka.k2, ka.k3, kb.k1, kb.k2, kb.k3};

    RateAllocation ra;
    double lambda1;
    const double lam_b = 1.0 - b.lambda1; // mirror back to the original indexing
    const bool pick_a = a.value > b.value + 1e-15 ||
                        (std::abs(a.value - b.value) <= 1e-15 && a.lambda1 <= lam_b);
    if (pick_a) {
        ra.r11 = a.r11;
        ra.r22 = a.r22;
        ra.r12 = a.t;
        lambda1 = a.lambda1;
    } else {
        ra.r11 = b.r22;
        ra.r22 = b.r11;
        ra.r21 = b.t;
        lambda1 = lam_b;
    }
    out.solution = normalize_one_side(ra, lambda1);

    const DfSolution lp = df_rate_lp(gains, conf);
    out.lp_value = lp.rate;
    out.lp_mismatch = std::abs(out.solution.rate - lp.rate) > 1e-6;
    return out;
}

ConferencingLink select_conferencing_link(const LinkGains& gains) {
    gains.validate();
    const CapSet c = caps_of(gains);
    const bool g1_gt = gains.gamma1 > gains.gamma2 && !nearly_equal(gains.gamma1, gains.gamma2);
    const bool g1_lt = gains.gamma2 > gains.gamma1 && !nearly_equal(gains.gamma1, gains.gamma2);
    const bool t2_gt = gains.gtilde2 > gains.gtilde1 && !nearly_equal(gains.gtilde1, gains.gtilde2);
    const bool t2_lt = gains.gtilde1 > gains.gtilde2 && !nearly_equal(gains.gtilde1, gains.gtilde2);
    const double p = c.c1 * c.c2;
    const double pt = c.ct1 * c.ct2;
    const bool p_lt = p < pt && !nearly_equal(p, pt);
    const bool p_gt = p > pt && !nearly_equal(p, pt);

    if ((g1_gt && t2_gt) || (g1_gt && !t2_gt && p_lt) || (!g1_gt && t2_gt && p_gt))
        return ConferencingLink::relay1_to_relay2;
    if ((g1_lt && t2_lt) || (g1_gt && !t2_gt && p_gt) || (!g1_gt && t2_gt && p_lt))
        return ConferencingLink::relay2_to_relay1;
    return ConferencingLink::none;
}

double asymptotic_df_limit(const LinkGains& gains) {
    gains.validate();
    const CapSet c = caps_of(gains);
    const std::array<AffineLine, 2> lines = {{
        {c.c1 - c.c2, c.c2},
        {c.ct2 - c.ct1, c.ct1},
    }};
    return maximin(lines).value;
}

} // namespace diamond
