#pragma once

#include <vector>

namespace diamond {

/// Dense linear program: maximize objective . x subject to
///   constraints[k].a . x <= constraints[k].b,
///   equalities[k].a . x == equalities[k].b,
///   x_i >= 0 for every i with nonneg[i] set.
/// All vectors share the dimension of `objective`.
struct LinearProgram {
    struct Row {
        std::vector<double> a;
        double b = 0.0;
    };

    std::vector<double> objective;
    std::vector<Row> constraints;
    std::vector<bool> nonneg;
    std::vector<Row> equalities;

    std::size_t dimension() const { return objective.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    double value = 0.0;
    std::vector<double> point;
};

/// Exact solve by exhaustive basic-solution enumeration: every subset of n
/// active constraints (equalities always active, inequality rows and the
/// nonnegativity bounds selectable) is solved as an n x n linear system with
/// partially pivoted Gaussian elimination; singular subsets are skipped,
/// feasible solutions are kept, and the best objective wins. Ties within
/// 1e-9 on the objective are broken lexicographically by the point vector.
///
/// Feasibility tolerance is 1e-9 absolute on constraint violation.
///
/// When `assume_bounded` is false, a recession-cone search (the same
/// enumerator on the box-sliced cone) decides between optimal and unbounded.
/// Callers whose problems are bounded by construction (rates capped by finite
/// capacities) may pass true to skip that search.
LpSolution solve(const LinearProgram& lp, bool assume_bounded = false);

} // namespace diamond
