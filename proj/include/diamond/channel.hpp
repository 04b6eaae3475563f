#pragma once

#include <cmath>
#include <stdexcept>

namespace diamond {

/// Linear-scale SNRs of the four wireless links: source->relay i (gamma_i)
/// and relay i->destination (gtilde_i). Power and channel coefficients are
/// already folded in; all values must be finite and >= 0.
struct LinkGains {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gtilde1 = 0.0;
    double gtilde2 = 0.0;

    void validate() const;
};

/// Rates of the two wired conferencing links, bits/s/Hz.
/// c12 is relay 1 -> relay 2, c21 is relay 2 -> relay 1.
struct ConferencingCapacities {
    double c12 = 0.0;
    double c21 = 0.0;

    void validate() const;
};

/// Fraction of time assigned to odd slots (relay 1 listening).
/// The even-slot fraction is derived, so lambda1 + lambda2 == 1 exactly.
struct TimeShare {
    double lambda1 = 0.5;

    double lambda2() const { return 1.0 - lambda1; }
    void validate() const;
};

/// Rates of the four sub-messages, bits/s/Hz. r_ij is decoded by relay i and
/// forwarded to the destination by relay j; r12/r21 travel over a
/// conferencing link in between.
struct RateAllocation {
    double r11 = 0.0;
    double r12 = 0.0;
    double r21 = 0.0;
    double r22 = 0.0;

    double sum() const { return r11 + r12 + r21 + r22; }
    void validate() const;
};

/// AWGN capacity log2(1 + snr) in bits/s/Hz. Throws std::domain_error for
/// negative or non-finite snr.
double awgn_capacity(double snr);

/// 10^(db/10). Throws std::domain_error for non-finite input.
double db_to_linear(double db);

/// 10*log10(linear). Requires linear > 0 and finite.
double linear_to_db(double linear);

} // namespace diamond
