#include "diamond/af.hpp"

#include "diamond/prng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace diamond {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFeasSlack = 1e-9;

struct Weights {
    // power-constraint weights: relay 1 spends w11 on p11 and w21 on p21,
    // relay 2 spends w22 on p22 and w12 on p12
    double w11, w21, w22, w12;
    bool use12, use21;
};

Weights weights_of(const LinkGains& g, const ConferencingNoise& n) {
    Weights w{};
    w.use12 = n.link12_usable();
    w.use21 = n.link21_usable();
    w.w11 = g.gamma1 + 1.0;
    w.w22 = g.gamma2 + 1.0;
    w.w21 = w.use21 ? g.gamma2 + 1.0 + n.sigma2_21 : kInf;
    w.w12 = w.use12 ? g.gamma1 + 1.0 + n.sigma2_12 : kInf;
    return w;
}

void check_feasible(const LinkGains& g, const ConferencingNoise& n, const AfCoefficients& p) {
    if (p.p11 < -kFeasSlack || p.p12 < -kFeasSlack || p.p21 < -kFeasSlack || p.p22 < -kFeasSlack)
        throw std::domain_error("af coefficients must be >= 0");
    if (!n.link12_usable() && p.p12 > kFeasSlack)
        throw std::domain_error("p12 must be zero when the 1->2 conferencing link is unusable");
    if (!n.link21_usable() && p.p21 > kFeasSlack)
        throw std::domain_error("p21 must be zero when the 2->1 conferencing link is unusable");
    const Weights w = weights_of(g, n);
    const double pow1 = p.p11 * w.w11 + (w.use21 ? p.p21 * w.w21 : 0.0);
    const double pow2 = p.p22 * w.w22 + (w.use12 ? p.p12 * w.w12 : 0.0);
    if (pow1 > 1.0 + kFeasSlack || pow2 > 1.0 + kFeasSlack)
        throw std::domain_error("af coefficients violate the transmit power constraint");
}

// Per-message effective SNRs at the destination.
std::pair<double, double> af_snrs(const LinkGains& g, const ConferencingNoise& n,
                                  const AfCoefficients& p) {
    double s1 = p.p11 * g.gamma1 * g.gtilde1 / (1.0 + p.p11 * g.gtilde1);
    if (n.link12_usable() && p.p12 > 0.0) {
        const double den =
            p.p12 * g.gtilde2 * (1.0 + n.sigma2_12) + p.p22 * g.gtilde2 * (g.gamma2 + 1.0) + 1.0;
        s1 += p.p12 * g.gamma1 * g.gtilde2 / den;
    }
    double s2 = p.p22 * g.gamma2 * g.gtilde2 / (1.0 + p.p22 * g.gtilde2);
    if (n.link21_usable() && p.p21 > 0.0) {
        const double den =
            p.p21 * g.gtilde1 * (1.0 + n.sigma2_21) + p.p11 * g.gtilde1 * (g.gamma1 + 1.0) + 1.0;
        s2 += p.p21 * g.gamma2 * g.gtilde1 / den;
    }
    return {s1, s2};
}

double af_sum_rate(const LinkGains& g, const ConferencingNoise& n, const AfCoefficients& p) {
    const auto [s1, s2] = af_snrs(g, n, p);
    return 0.5 * awgn_capacity(s1) + 0.5 * awgn_capacity(s2);
}

// Exact Euclidean projection of (x, y) onto {x >= 0, y >= 0, wx x + wy y <= 1}.
std::pair<double, double> project_pair(double x, double y, double wx, double wy) {
    x = std::max(x, 0.0);
    y = std::max(y, 0.0);
    if (wx * x + wy * y <= 1.0) return {x, y};
    const double t = (wx * x + wy * y - 1.0) / (wx * wx + wy * wy);
    double cx = x - t * wx, cy = y - t * wy;
    if (cx >= 0.0 && cy >= 0.0) {
        // cancellation in the line projection can leave a tiny overshoot;
        // scale back onto the budget
        const double used = wx * cx + wy * cy;
        if (used > 1.0) {
            cx /= used;
            cy /= used;
        }
        return {cx, cy};
    }
    // nearest budget-line endpoint
    const double ex = 1.0 / wx, ey = 1.0 / wy;
    const double d_x = (ex - x) * (ex - x) + y * y;
    const double d_y = x * x + (ey - y) * (ey - y);
    return d_x <= d_y ? std::make_pair(ex, 0.0) : std::make_pair(0.0, ey);
}

AfCoefficients project(const Weights& w, const AfCoefficients& q) {
    AfCoefficients p;
    if (w.use21) {
        auto [a, c] = project_pair(q.p11, q.p21, w.w11, w.w21);
        p.p11 = a;
        p.p21 = c;
    } else {
        p.p11 = std::clamp(q.p11, 0.0, 1.0 / w.w11);
        p.p21 = 0.0;
    }
    if (w.use12) {
        auto [d, b] = project_pair(q.p22, q.p12, w.w22, w.w12);
        p.p22 = d;
        p.p12 = b;
    } else {
        p.p22 = std::clamp(q.p22, 0.0, 1.0 / w.w22);
        p.p12 = 0.0;
    }
    return p;
}

// One projected-gradient ascent run. Terminates when the relative improvement
// stays below 1e-10 for 20 consecutive iterations or after 1e5 iterations.
AfSolution ascend(const LinkGains& g, const ConferencingNoise& n, const Weights& w,
                  AfCoefficients p) {
    p = project(w, p);
    double f = af_sum_rate(g, n, p);
    double step = 1.0;
    int calm = 0;
    for (int iter = 0; iter < 100000 && calm < 20; ++iter) {
        const auto grad = af_gradient(g, n, p);
        double s = step;
        bool improved = false;
        AfCoefficients q;
        double fq = f;
        for (int bt = 0; bt < 60; ++bt) {
            q = project(w, {p.p11 + s * grad[0], p.p12 + s * grad[1], p.p21 + s * grad[2],
                            p.p22 + s * grad[3]});
            fq = af_sum_rate(g, n, q);
            if (fq > f) {
                improved = true;
                break;
            }
            s *= 0.5;
        }
        if (!improved) {
            ++calm;
            continue;
        }
        calm = (fq - f) < 1e-10 * std::max(std::abs(f), 1e-12) ? calm + 1 : 0;
        p = q;
        f = fq;
        step = std::min(2.0 * s, 1e9);
    }
    const auto [r1, r2] = af_objective(g, n, p);
    return {r1 + r2, p, r1, r2};
}

} // namespace

bool ConferencingNoise::link12_usable() const { return std::isfinite(sigma2_12); }
bool ConferencingNoise::link21_usable() const { return std::isfinite(sigma2_21); }

ConferencingNoise conferencing_noise(const LinkGains& gains, const ConferencingCapacities& conf) {
    gains.validate();
    conf.validate();
    ConferencingNoise n;
    n.sigma2_12 =
        conf.c12 > 0.0 ? (gains.gamma1 + 1.0) / (std::exp2(conf.c12 / 2.0) - 1.0) : kInf;
    n.sigma2_21 =
        conf.c21 > 0.0 ? (gains.gamma2 + 1.0) / (std::exp2(conf.c21 / 2.0) - 1.0) : kInf;
    return n;
}

std::pair<double, double> af_objective(const LinkGains& gains, const ConferencingNoise& noise,
                                       const AfCoefficients& coeffs) {
    gains.validate();
    check_feasible(gains, noise, coeffs);
    const auto [s1, s2] = af_snrs(gains, noise, coeffs);
    return {0.5 * awgn_capacity(s1), 0.5 * awgn_capacity(s2)};
}

std::array<double, 4> af_gradient(const LinkGains& gains, const ConferencingNoise& noise,
                                  const AfCoefficients& p) {
    const double g1 = gains.gamma1, g2 = gains.gamma2;
    const double t1 = gains.gtilde1, t2 = gains.gtilde2;
    const bool u12 = noise.link12_usable(), u21 = noise.link21_usable();
    const double ln2 = std::log(2.0);

    const double d1 = 1.0 + p.p11 * t1;
    double S1 = p.p11 * g1 * t1 / d1;
    double D1 = 1.0;
    if (u12) {
        D1 = p.p12 * t2 * (1.0 + noise.sigma2_12) + p.p22 * t2 * (g2 + 1.0) + 1.0;
        S1 += p.p12 * g1 * t2 / D1;
    }
    const double d2 = 1.0 + p.p22 * t2;
    double S2 = p.p22 * g2 * t2 / d2;
    double D2 = 1.0;
    if (u21) {
        D2 = p.p21 * t1 * (1.0 + noise.sigma2_21) + p.p11 * t1 * (g1 + 1.0) + 1.0;
        S2 += p.p21 * g2 * t1 / D2;
    }
    const double c1 = 0.5 / (ln2 * (1.0 + S1));
    const double c2 = 0.5 / (ln2 * (1.0 + S2));

    std::array<double, 4> grad{};
    grad[0] = c1 * g1 * t1 / (d1 * d1);
    if (u21) grad[0] -= c2 * p.p21 * g2 * t1 * t1 * (g1 + 1.0) / (D2 * D2);
    if (u12) grad[1] = c1 * g1 * t2 * (p.p22 * t2 * (g2 + 1.0) + 1.0) / (D1 * D1);
    if (u21) grad[2] = c2 * g2 * t1 * (p.p11 * t1 * (g1 + 1.0) + 1.0) / (D2 * D2);
    grad[3] = c2 * g2 * t2 / (d2 * d2);
    if (u12) grad[3] -= c1 * p.p12 * g1 * t2 * t2 * (g2 + 1.0) / (D1 * D1);
    return grad;
}

AfSolution maximize_af(const LinkGains& gains, const ConferencingCapacities& conf) {
    gains.validate();
    conf.validate();
    const ConferencingNoise n = conferencing_noise(gains, conf);
    const Weights w = weights_of(gains, n);
    const double b11 = 1.0 / w.w11, b22 = 1.0 / w.w22;
    const double b21 = w.use21 ? 1.0 / w.w21 : 0.0;
    const double b12 = w.use12 ? 1.0 / w.w12 : 0.0;

    std::vector<AfCoefficients> starts = {
        {0.5 * b11, 0.5 * b12, 0.5 * b21, 0.5 * b22},
        {b11, 0.0, 0.0, b22},
        {0.0, b12, b21, 0.0},
        {b11, b12, 0.0, 0.0},
        {0.0, 0.0, b21, b22},
    };
    // coarse-grid seed pins the right basin when the ascent alone would not
    {
        AfCoefficients best{};
        double fbest = -1.0;
        const int m = 9;
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
                for (int k = 0; k <= m; ++k)
                    for (int l = 0; l <= m; ++l) {
                        AfCoefficients q{i * b11 / m, j * b12 / m, k * b21 / m, l * b22 / m};
                        if (q.p11 * w.w11 + (w.use21 ? q.p21 * w.w21 : 0.0) > 1.0) continue;
                        if (q.p22 * w.w22 + (w.use12 ? q.p12 * w.w12 : 0.0) > 1.0) continue;
                        const double f = af_sum_rate(gains, n, q);
                        if (f > fbest) {
                            fbest = f;
                            best = q;
                        }
                    }
        starts.push_back(best);
    }

    AfSolution best;
    best.rate = -1.0;
    for (const auto& s : starts) {
        const AfSolution cand = ascend(gains, n, w, s);
        if (cand.rate > best.rate) best = cand;
    }
    return best;
}

AfLowSnrSolution af_low_snr(const LinkGains& gains, const ConferencingNoise& noise) {
    gains.validate();
    const double g1 = gains.gamma1, g2 = gains.gamma2;
    const double own1 = g1 / (g1 + 1.0);
    const double own2 = g2 / (g2 + 1.0);
    const double cross1 = noise.link21_usable() ? g2 / (g2 + 1.0 + noise.sigma2_21) : 0.0;
    const double cross2 = noise.link12_usable() ? g1 / (g1 + 1.0 + noise.sigma2_12) : 0.0;

    AfLowSnrSolution out;
    AfCoefficients p;
    if (own1 >= cross1 && own2 >= cross2) {
        p.p11 = 1.0 / (g1 + 1.0);
        p.p22 = 1.0 / (g2 + 1.0);
        out.case_id = AfLowSnrCase::both_direct;
    } else if (own1 < cross1 && own2 >= cross2) {
        p.p21 = 1.0 / (g2 + 1.0 + noise.sigma2_21);
        p.p22 = 1.0 / (g2 + 1.0);
        out.case_id = AfLowSnrCase::relay1_forwards_relay2;
    } else if (own1 >= cross1 && own2 < cross2) {
        p.p11 = 1.0 / (g1 + 1.0);
        p.p12 = 1.0 / (g1 + 1.0 + noise.sigma2_12);
        out.case_id = AfLowSnrCase::relay2_forwards_relay1;
    } else {
        // own1 < cross1 forces g2 > g1, own2 < cross2 forces g1 > g2
        throw std::logic_error("af_low_snr: contradictory case reached");
    }
    const double surrogate = 0.5 * (p.p11 * g1 * gains.gtilde1 + p.p12 * g1 * gains.gtilde2 +
                                    p.p21 * g2 * gains.gtilde1 + p.p22 * g2 * gains.gtilde2);
    out.solution.coeffs = p;
    out.solution.rate = surrogate;
    out.solution.r1 = 0.5 * (p.p11 * g1 * gains.gtilde1 + p.p12 * g1 * gains.gtilde2);
    out.solution.r2 = 0.5 * (p.p21 * g2 * gains.gtilde1 + p.p22 * g2 * gains.gtilde2);
    return out;
}

P2Program build_p2(const LinkGains& gains, const ConferencingNoise& noise) {
    const Weights w = weights_of(gains, noise);
    P2Program prog;
    int n = 0;
    prog.col[0] = n++;
    if (w.use12) prog.col[1] = n++;
    if (w.use21) prog.col[2] = n++;
    prog.col[3] = n++;

    LinearProgram& lp = prog.lp;
    lp.objective.assign(n, 0.0);
    lp.objective[prog.col[0]] = 0.5 * gains.gamma1 * gains.gtilde1;
    if (w.use12) lp.objective[prog.col[1]] = 0.5 * gains.gamma1 * gains.gtilde2;
    if (w.use21) lp.objective[prog.col[2]] = 0.5 * gains.gamma2 * gains.gtilde1;
    lp.objective[prog.col[3]] = 0.5 * gains.gamma2 * gains.gtilde2;
    lp.nonneg.assign(n, true);

    LinearProgram::Row r1, r2;
    r1.a.assign(n, 0.0);
    r1.a[prog.col[0]] = w.w11;
    if (w.use21) r1.a[prog.col[2]] = w.w21;
    r1.b = 1.0;
    r2.a.assign(n, 0.0);
    r2.a[prog.col[3]] = w.w22;
    if (w.use12) r2.a[prog.col[1]] = w.w12;
    r2.b = 1.0;
    lp.constraints.push_back(r1);
    lp.constraints.push_back(r2);
    return prog;
}

ConcavityReport check_concavity(const LinkGains& gains, const ConferencingNoise& noise,
                                int samples, std::uint64_t seed) {
    gains.validate();
    if (samples < 1) throw std::domain_error("check_concavity: samples must be >= 1");
    const Weights w = weights_of(gains, noise);
    SplitMix64 rng(seed);
    ConcavityReport rep;
    rep.worst_minor = -kInf;
    rep.worst_det = -kInf;
    rep.worst_midpoint_gap = kInf;

    // Cross-term kernels z = x/(x + a y + b) after normalizing the x
    // coefficient in Eq-28-style denominators to one.
    struct Kernel {
        double a, b, xmax, ymax;
    };
    std::vector<Kernel> kernels;
    if (w.use12 && gains.gtilde2 > 0.0) {
        const double B = gains.gtilde2 * (1.0 + noise.sigma2_12);
        kernels.push_back({gains.gtilde2 * (gains.gamma2 + 1.0) / B, 1.0 / B,
                           1.0 / w.w12, 1.0 / w.w22});
    }
    if (w.use21 && gains.gtilde1 > 0.0) {
        const double B = gains.gtilde1 * (1.0 + noise.sigma2_21);
        kernels.push_back({gains.gtilde1 * (gains.gamma1 + 1.0) / B, 1.0 / B,
                           1.0 / w.w21, 1.0 / w.w11});
    }

    for (int i = 0; i < samples && !kernels.empty(); ++i) {
        const Kernel& k = kernels[static_cast<std::size_t>(i) % kernels.size()];
        const double x = rng.uniform() * k.xmax;
        const double y = rng.uniform() * k.ymax;
        auto z = [&](double xx, double yy) { return xx / (xx + k.a * yy + k.b); };
        const double hx = 1e-5 * std::max(k.xmax, 1e-6);
        const double hy = 1e-5 * std::max(k.ymax, 1e-6);
        const double zxx = (z(x + hx, y) - 2.0 * z(x, y) + z(x - hx, y)) / (hx * hx);
        const double zyy = (z(x, y + hy) - 2.0 * z(x, y) + z(x, y - hy)) / (hy * hy);
        const double zxy = (z(x + hx, y + hy) - z(x + hx, y - hy) - z(x - hx, y + hy) +
                            z(x - hx, y - hy)) /
                           (4.0 * hx * hy);
        const double det = zxx * zyy - zxy * zxy;
        ++rep.hessian_samples;
        rep.worst_minor = std::max(rep.worst_minor, zxx);
        rep.worst_det = std::max(rep.worst_det, det);
        if (zxx >= 1e-8 || det > 1e-8) ++rep.hessian_violations;
    }

    auto random_feasible = [&]() {
        AfCoefficients p;
        for (;;) {
            p.p11 = rng.uniform() / w.w11;
            p.p21 = w.use21 ? rng.uniform() / w.w21 : 0.0;
            if (p.p11 * w.w11 + (w.use21 ? p.p21 * w.w21 : 0.0) <= 1.0) break;
        }
        for (;;) {
            p.p22 = rng.uniform() / w.w22;
            p.p12 = w.use12 ? rng.uniform() / w.w12 : 0.0;
            if (p.p22 * w.w22 + (w.use12 ? p.p12 * w.w12 : 0.0) <= 1.0) break;
        }
        return p;
    };
    for (int i = 0; i < samples; ++i) {
        const AfCoefficients a = random_feasible();
        const AfCoefficients b = random_feasible();
        const AfCoefficients mid{0.5 * (a.p11 + b.p11), 0.5 * (a.p12 + b.p12),
                                 0.5 * (a.p21 + b.p21), 0.5 * (a.p22 + b.p22)};
        const double gap = af_sum_rate(gains, noise, mid) -
                           0.5 * (af_sum_rate(gains, noise, a) + af_sum_rate(gains, noise, b));
        ++rep.midpoint_samples;
        if (gap < -1e-9) {
            ++rep.midpoint_violations;
            if (gap < rep.worst_midpoint_gap) {
                rep.worst_midpoint_gap = gap;
                rep.worst_midpoint_a = a;
                rep.worst_midpoint_b = b;
            }
        }
    }
    if (rep.worst_midpoint_gap == kInf) rep.worst_midpoint_gap = 0.0;
    return rep;
}

} // namespace diamond
