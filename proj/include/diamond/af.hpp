#pragma once

#include "diamond/channel.hpp"
#include "diamond/linprog.hpp"

#include <array>
#include <cstdint>

namespace diamond {

/// Effective Gaussian noise variances of the AF conferencing links. A link
/// with zero conferencing rate carries the +infinity sentinel, which forces
/// the matching cross coefficient to zero downstream.
struct ConferencingNoise {
    double sigma2_12 = 0.0;
    double sigma2_21 = 0.0;

    bool link12_usable() const;
    bool link21_usable() const;
};

/// Squared combining magnitudes |a_ij|^2: signal received at relay i,
/// transmitted by relay j. Feasibility is the per-relay transmit power pair
/// of constraints
///   p11 (gamma1+1) + p21 (gamma2+1+sigma2_21) <= 1,
///   p22 (gamma2+1) + p12 (gamma1+1+sigma2_12) <= 1.
struct AfCoefficients {
    double p11 = 0.0;
    double p12 = 0.0;
    double p21 = 0.0;
    double p22 = 0.0;
};

/// An AF operating point: the sum rate, the per-message rates, and the
/// combining magnitudes that achieve them.
struct AfSolution {
    double rate = 0.0;
    AfCoefficients coeffs;
    double r1 = 0.0;
    double r2 = 0.0;
};

/// Noise variances (gamma_{3-i}+1)/(2^{C/2}-1) induced by conferencing at
/// rate C over a link whose relaying burns half the slots; C = 0 yields the
/// sentinel.
ConferencingNoise conferencing_noise(const LinkGains& gains, const ConferencingCapacities& conf);

/// Per-message AF rates (r1, r2) at the given combining point. Throws
/// std::domain_error when the point violates the power constraints (beyond
/// 1e-9) or puts weight on an unusable conferencing link.
std::pair<double, double> af_objective(const LinkGains& gains, const ConferencingNoise& noise,
                                       const AfCoefficients& coeffs);

/// Analytic gradient of r1 + r2 in (p11, p12, p21, p22). Components of
/// unusable links are zero.
std::array<double, 4> af_gradient(const LinkGains& gains, const ConferencingNoise& noise,
                                  const AfCoefficients& coeffs);

/// Maximize r1 + r2 over the feasible combining polytope by projected
/// gradient ascent with backtracking. The objective is not concave over the
/// whole polytope (its cross terms are convex in the interfering
/// coefficient), so the ascent is restarted from a fixed set of corner,
/// center and coarse-grid points and the best converged point wins.
AfSolution maximize_af(const LinkGains& gains, const ConferencingCapacities& conf);

enum class AfLowSnrCase {
    both_direct = 1,          // each relay forwards its own received signal
    impossible = 2,           // ruled out; reported as internal inconsistency
    relay1_forwards_relay2 = 3,
    relay2_forwards_relay1 = 4,
};

struct AfLowSnrSolution {
    AfSolution solution; // rate fields hold the low-SNR surrogate objective
    AfLowSnrCase case_id = AfLowSnrCase::both_direct;
};

/// Closed-form solution of the low-SNR (gtilde -> 0) linearized problem:
/// each relay forwards only the signal reaching it with the higher effective
/// SNR. The returned rate is the surrogate objective
/// (p11 g1 gt1 + p12 g1 gt2 + p21 g2 gt1 + p22 g2 gt2)/2. Reaching the
/// contradictory case 2 throws std::logic_error.
AfLowSnrSolution af_low_snr(const LinkGains& gains, const ConferencingNoise& noise);

/// The low-SNR surrogate as a LinearProgram over the usable coefficients.
/// col[i] maps (p11,p12,p21,p22) to its column, -1 when forced to zero.
struct P2Program {
    LinearProgram lp;
    std::array<int, 4> col = {-1, -1, -1, -1};
};

P2Program build_p2(const LinkGains& gains, const ConferencingNoise& noise);

/// Sampled curvature evidence for the AF objective. hessian_* cover the
/// printed conditions on the normalized cross-term kernel z = x/(x+ay+b)
/// (leading minor < 0, determinant <= 0, both within 1e-8); midpoint_* cover
/// midpoint concavity of r1 + r2 on random feasible segments. Violations are
/// reported, not thrown.
struct ConcavityReport {
    int hessian_samples = 0;
    int hessian_violations = 0;
    double worst_minor = 0.0;    // most positive leading minor seen
    double worst_det = 0.0;      // most positive determinant seen
    int midpoint_samples = 0;
    int midpoint_violations = 0;
    double worst_midpoint_gap = 0.0; // most negative f(mid) - avg(f) seen
    AfCoefficients worst_midpoint_a;
    AfCoefficients worst_midpoint_b;
};

ConcavityReport check_concavity(const LinkGains& gains, const ConferencingNoise& noise,
                                int samples, std::uint64_t seed);

} // namespace diamond
