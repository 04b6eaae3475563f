#include "diamond/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace diamond {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kTieTol = 1e-9;

// Gaussian elimination with partial pivoting on an n x n system stored
// row-major in `m`, rhs in `rhs`. Returns false when a pivot is negligible
// relative to the matrix scale (singular subset).
bool solve_square(std::vector<double>& m, std::vector<double>& rhs, std::size_t n) {
    double scale = 0.0;
    for (double v : m) scale = std::max(scale, std::abs(v));
    const double tol = std::max(scale, 1.0) * 1e-11;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col]))
                piv = r;
        if (std::abs(m[piv * n + col]) <= tol)
            return false;
        if (piv != col) {
            for (std::size_t c = col; c < n; ++c)
                std::swap(m[piv * n + c], m[col * n + c]);
            std::swap(rhs[piv], rhs[col]);
        }
        const double d = m[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r * n + col] / d;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c)
                m[r * n + c] -= f * m[col * n + c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        double v = rhs[col];
        for (std::size_t c = col + 1; c < n; ++c)
            v -= m[col * n + c] * rhs[c];
        rhs[col] = v / m[col * n + col];
    }
    return true;
}

struct Candidate {
    bool found = false;
    double value = -std::numeric_limits<double>::infinity();
    std::vector<double> point;
};

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i] - 1e-12) return true;
        if (a[i] > b[i] + 1e-12) return false;
    }
    return false;
}

// All selectable rows in one flat list: inequality rows first, then one
// row -x_i <= 0 per nonnegative variable.
struct RowSet {
    std::vector<LinearProgram::Row> rows;
};

RowSet build_rows(const LinearProgram& lp) {
    RowSet rs;
    rs.rows = lp.constraints;
    for (std::size_t i = 0; i < lp.dimension(); ++i) {
        if (lp.nonneg[i]) {
            LinearProgram::Row r;
            r.a.assign(lp.dimension(), 0.0);
            r.a[i] = -1.0;
            r.b = 0.0;
            rs.rows.push_back(r);
        }
    }
    return rs;
}

bool feasible(const LinearProgram& lp, const RowSet& rs, const std::vector<double>& x) {
    const std::size_t n = lp.dimension();
    for (const auto& r : rs.rows) {
        double v = 0.0;
        for (std::size_t i = 0; i < n; ++i) v += r.a[i] * x[i];
        if (v > r.b + kFeasTol) return false;
    }
    for (const auto& r : lp.equalities) {
        double v = 0.0;
        for (std::size_t i = 0; i < n; ++i) v += r.a[i] * x[i];
        if (std::abs(v - r.b) > kFeasTol) return false;
    }
    return true;
}

// Enumerate every basis (equalities + `pick` selectable rows), keep the best
// feasible solution.
Candidate enumerate_vertices(const LinearProgram& lp, const RowSet& rs) {
    const std::size_t n = lp.dimension();
    const std::size_t neq = lp.equalities.size();
    Candidate best;
    if (neq > n) return best;
    const std::size_t pick = n - neq;
    const std::size_t m = rs.rows.size();
    if (pick > m) return best;

    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;

    std::vector<double> mat(n * n), rhs(n), work, sol;
    for (;;) {
        // Assemble active system: equalities then selected rows.
        for (std::size_t r = 0; r < neq; ++r) {
            for (std::size_t c = 0; c < n; ++c) mat[r * n + c] = lp.equalities[r].a[c];
            rhs[r] = lp.equalities[r].b;
        }
        for (std::size_t r = 0; r < pick; ++r) {
            const auto& row = rs.rows[idx[r]];
            for (std::size_t c = 0; c < n; ++c) mat[(neq + r) * n + c] = row.a[c];
            rhs[neq + r] = row.b;
        }
        work = mat;
        sol = rhs;
        if (solve_square(work, sol, n) && feasible(lp, rs, sol)) {
            double v = 0.0;
            for (std::size_t i = 0; i < n; ++i) v += lp.objective[i] * sol[i];
            if (!best.found || v > best.value + kTieTol ||
                (std::abs(v - best.value) <= kTieTol && lex_less(sol, best.point))) {
                best.found = true;
                best.value = v;
                best.point = sol;
            }
        }
        // next combination
        std::size_t i = pick;
        while (i-- > 0) {
            if (idx[i] + (pick - i) < m) {
                ++idx[i];
                for (std::size_t j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return best;
        }
        if (pick == 0) return best; // single fully-determined basis
    }
}

// True when the recession cone contains a direction with positive objective:
// max c.d over { A d <= 0, A_eq d = 0, d_i >= 0 for flagged i, |d_i| <= 1 }.
bool improving_ray_exists(const LinearProgram& lp) {
    LinearProgram cone;
    cone.objective = lp.objective;
    cone.nonneg = lp.nonneg;
    const std::size_t n = lp.dimension();
    for (const auto& r : lp.constraints) cone.constraints.push_back({r.a, 0.0});
    for (const auto& r : lp.equalities) cone.equalities.push_back({r.a, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        LinearProgram::Row hi, lo;
        hi.a.assign(n, 0.0); hi.a[i] = 1.0; hi.b = 1.0;
        lo.a.assign(n, 0.0); lo.a[i] = -1.0; lo.b = 1.0;
        cone.constraints.push_back(hi);
        cone.constraints.push_back(lo);
    }
    RowSet rs = build_rows(cone);
    Candidate c = enumerate_vertices(cone, rs);
    return c.found && c.value > 1e-9;
}

} // namespace

LpSolution solve(const LinearProgram& lp, bool assume_bounded) {
    const std::size_t n = lp.dimension();
    if (n == 0) throw std::invalid_argument("solve: empty program");
    if (lp.nonneg.size() != n)
        throw std::invalid_argument("solve: nonneg flag list does not match dimension");
    auto check_row = [n](const LinearProgram::Row& r) {
        if (r.a.size() != n) throw std::invalid_argument("solve: row dimension mismatch");
        for (double v : r.a)
            if (!std::isfinite(v)) throw std::invalid_argument("solve: non-finite coefficient");
        if (!std::isfinite(r.b)) throw std::invalid_argument("solve: non-finite bound");
    };
    for (const auto& r : lp.constraints) check_row(r);
    for (const auto& r : lp.equalities) check_row(r);
    for (double v : lp.objective)
        if (!std::isfinite(v)) throw std::invalid_argument("solve: non-finite objective");

    RowSet rs = build_rows(lp);
    Candidate best = enumerate_vertices(lp, rs);

    if (!best.found) {
        // Either infeasible, or feasible with no vertex (possible only when
        // some variable is unconstrained below). Retry inside a large box to
        // separate the two; the box cannot change feasibility.
        LinearProgram boxed = lp;
        for (std::size_t i = 0; i < n; ++i) {
            LinearProgram::Row hi, lo;
            hi.a.assign(n, 0.0); hi.a[i] = 1.0; hi.b = 1e9;
            lo.a.assign(n, 0.0); lo.a[i] = -1.0; lo.b = 1e9;
            boxed.constraints.push_back(hi);
            boxed.constraints.push_back(lo);
        }
        RowSet rsb = build_rows(boxed);
        Candidate b2 = enumerate_vertices(boxed, rsb);
        if (!b2.found) return {LpStatus::infeasible, 0.0, {}};
        if (!assume_bounded && improving_ray_exists(lp))
            return {LpStatus::unbounded, std::numeric_limits<double>::infinity(), b2.point};
        return {LpStatus::optimal, b2.value, b2.point};
    }

    if (!assume_bounded && improving_ray_exists(lp))
        return {LpStatus::unbounded, std::numeric_limits<double>::infinity(), best.point};
    return {LpStatus::optimal, best.value, best.point};
}

} // namespace diamond
