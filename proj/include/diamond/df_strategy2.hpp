#pragma once

#include "diamond/channel.hpp"
#include "diamond/df_strategy1.hpp"
#include "diamond/linprog.hpp"

namespace diamond {

/// Cut-set capacity upper bound under conferencing strategy II: as strategy I
/// but the conferencing rates enter at full value, not scaled by the slot
/// fractions.
UpperBound upper_bound_II(const LinkGains& gains, const ConferencingCapacities& conf);

/// DF achievable rate under strategy II: the strategy-I LP with the
/// conferencing constraints r12 <= c12, r21 <= c21 (no lambda factor),
/// one-side normalized.
DfSolution df_rate_II(const LinkGains& gains, const ConferencingCapacities& conf);

/// The strategy-II rate LP (variables r11,r12,r21,r22,lambda1,lambda2).
/// Exposed for oracle cross-checks.
LinearProgram build_p3(const LinkGains& gains, const ConferencingCapacities& conf);

/// Minimum total conferencing rate for strategy-II DF to reach its capacity
/// upper bound. ctilde_upper is the two-term maximin (the bound with the
/// conferencing terms removed); g_value is the conferencing credit available
/// at the best maximizing time share, capped so the resulting bound is never
/// negative; min_conf_sum = ctilde_upper - g_value is the required lower
/// bound on c12 + c21. case_id records which of the six tabulated channel
/// conditions matched (0 when none does and the maximin fallback was used).
struct ThresholdReport {
    double ctilde_upper = 0.0;
    double lambda_star = 0.0;
    double g_value = 0.0;
    double min_conf_sum = 0.0;
    int case_id = 0;
};

ThresholdReport min_conferencing_for_capacity(const LinkGains& gains);

/// True when, with symmetric conferencing rates c12 = c21 = c, the strategy-II
/// DF rate equals the strategy-I capacity upper bound within 1e-6.
bool verify_prop6(const LinkGains& gains, double c);

} // namespace diamond
