#pragma once

#include "diamond/channel.hpp"
#include "diamond/df_strategy1.hpp"

namespace diamond::detail {

// Shared LP path for the strategy-I/II DF rates and the forced one-side
// variants. Cross variables whose direction is disallowed or whose link
// capacity is zero are dropped from the program instead of carrying
// zero-width constraints.
DfSolution solve_df_lp(const LinkGains& gains, const ConferencingCapacities& conf,
                       bool allow12, bool allow21, bool strategyII);

} // namespace diamond::detail
