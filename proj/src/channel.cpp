#include "diamond/channel.hpp"

#include <string>

namespace diamond {

namespace {

void require_finite_nonneg(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0)
        throw std::domain_error(std::string(name) + " must be finite and >= 0");
}

} // namespace

void LinkGains::validate() const {
    require_finite_nonneg(gamma1, "gamma1");
    require_finite_nonneg(gamma2, "gamma2");
    require_finite_nonneg(gtilde1, "gtilde1");
    require_finite_nonneg(gtilde2, "gtilde2");
}

void ConferencingCapacities::validate() const {
    require_finite_nonneg(c12, "c12");
    require_finite_nonneg(c21, "c21");
}

void TimeShare::validate() const {
    if (!std::isfinite(lambda1) || lambda1 < 0.0 || lambda1 > 1.0)
        throw std::domain_error("lambda1 must lie in [0,1]");
}

void RateAllocation::validate() const {
    require_finite_nonneg(r11, "r11");
    require_finite_nonneg(r12, "r12");
    require_finite_nonneg(r21, "r21");
    require_finite_nonneg(r22, "r22");
}

double awgn_capacity(double snr) {
    if (!std::isfinite(snr) || snr < 0.0)
        throw std::domain_error("awgn_capacity: snr must be finite and >= 0");
    // log1p keeps precision for snr << 1.
    return std::log1p(snr) / std::log(2.0);
}

double db_to_linear(double db) {
    if (!std::isfinite(db))
        throw std::domain_error("db_to_linear: non-finite input");
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear) {
    if (!std::isfinite(linear) || linear <= 0.0)
        throw std::domain_error("linear_to_db: input must be finite and > 0");
    return 10.0 * std::log10(linear);
}

} // namespace diamond
