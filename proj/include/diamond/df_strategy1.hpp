#pragma once

#include "diamond/channel.hpp"
#include "diamond/linprog.hpp"
#include "diamond/maximin.hpp"

namespace diamond {

enum class ConferencingLink { relay1_to_relay2, relay2_to_relay1, none };

const char* to_string(ConferencingLink link);

/// A decode-and-forward operating point: achieved sum rate, the rate split,
/// the slot time share, and which conferencing link carries traffic. After
/// one-side normalization at most one of r12/r21 is positive and active_link
/// names it (none when both are zero).
struct DfSolution {
    double rate = 0.0;
    RateAllocation allocation;
    TimeShare share;
    ConferencingLink active_link = ConferencingLink::none;
};

/// Candidate-interval endpoints of the one-side subproblems. k1..k3 bound the
/// conferenced rate of the relay1->relay2 subproblem (k3 is the crossing of
/// the two value lines, +inf when they do not cross at a nonnegative rate);
/// ktilde1..ktilde3 are the relay2->relay1 analogues obtained by swapping the
/// relay indices and the conferencing capacities.
struct CaseBreakpoints {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double ktilde1 = 0.0;
    double ktilde2 = 0.0;
    double ktilde3 = 0.0;
};

struct UpperBound {
    double value = 0.0;
    TimeShare share;
};

/// Cut-set capacity upper bound under conferencing strategy I: the four-term
/// maximin over the time share, with the conferencing rates scaled by the
/// slot fractions.
UpperBound upper_bound_I(const LinkGains& gains, const ConferencingCapacities& conf);

/// DF achievable rate under strategy I via the six-constraint rate LP over
/// {r11,r12,r21,r22,lambda1,lambda2}, post-processed into one-side form
/// (subtract min(r12,r21) from both cross rates and credit it to r11/r22,
/// which preserves feasibility and the optimum).
DfSolution df_rate_lp(const LinkGains& gains, const ConferencingCapacities& conf);

/// The same LP with one conferencing direction forced to zero; used by the
/// one-side-optimality checks.
DfSolution df_rate_lp_one_side(const LinkGains& gains, const ConferencingCapacities& conf,
                               ConferencingLink allowed);

/// Closed-form DF rate: solves the two one-side subproblems analytically.
/// Each subproblem maximizes a minimum of two lines in the conferenced rate
/// over [0, k]; the dispatch on the gain orderings (equalities within 1e-12
/// relative route to the no-conferencing branch) picks the endpoint or the
/// line crossing. The result is cross-checked against df_rate_lp and
/// lp_mismatch is set when they differ by more than 1e-6.
struct DfClosedForm {
    DfSolution solution;
    CaseBreakpoints breakpoints;
    double lp_value = 0.0;
    bool lp_mismatch = false;
};

DfClosedForm df_rate_closed_form(const LinkGains& gains, const ConferencingCapacities& conf);

/// Which conferencing link one-side conferencing should use, from the gain
/// orderings and the capacity products; equality rows select none.
ConferencingLink select_conferencing_link(const LinkGains& gains);

/// Capacity in the infinite-conferencing limit: the two-term maximin with
/// the conferencing terms removed.
double asymptotic_df_limit(const LinkGains& gains);

/// The strategy-I rate LP as a LinearProgram (variables r11,r12,r21,r22,
/// lambda1,lambda2). Exposed for oracle cross-checks.
LinearProgram build_p1(const LinkGains& gains, const ConferencingCapacities& conf);

} // namespace diamond
