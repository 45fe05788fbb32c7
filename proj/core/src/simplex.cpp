#include "timcomp/simplex.hpp"

#include <cstddef>

#include "timcomp/errors.hpp"

namespace timcomp {

namespace {

/**
 * Dense simplex tableau over equality constraints T x = rhs with a known
 * basic feasible start. Column layout is fixed by the caller; the objective
 * is handled through explicit reduced-cost computation (no extra row), which
 * keeps the pivoting code short at these problem sizes.
 */
struct Tableau {
    std::size_t m, n;                         // constraints, variables
    std::vector<std::vector<Rational>> t;     // m rows of n coefficients
    std::vector<Rational> rhs;                // length m, kept >= 0
    std::vector<std::size_t> basis;           // basic variable per row

    void pivot(std::size_t row, std::size_t col) {
        const Rational p = t[row][col];
        for (std::size_t j = 0; j < n; ++j) t[row][j] /= p;
        rhs[row] /= p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || t[r][col] == 0) continue;
            const Rational f = t[r][col];
            for (std::size_t j = 0; j < n; ++j) t[r][j] -= f * t[row][j];
            rhs[r] -= f * rhs[row];
        }
        basis[row] = col;
    }

    /**
     * Minimizes obj (a cost per variable) with Bland's anti-cycling rule.
     * `allowed[j]` marks columns eligible to enter the basis.
     */
    void minimize(const std::vector<Rational>& obj,
                  const std::vector<char>& allowed) {
        for (;;) {
            // Multipliers y: y_r = obj[basis[r]] reduced through the tableau.
            // Reduced cost of column j is obj[j] - sum_r y_r * t[r][j].
            std::size_t enter = n;
            for (std::size_t j = 0; j < n && enter == n; ++j) {
                if (!allowed[j]) continue;
                Rational red = obj[j];
                for (std::size_t r = 0; r < m; ++r) {
                    if (obj[basis[r]] != 0) red -= obj[basis[r]] * t[r][j];
                }
                if (red < 0) enter = j;  // Bland: first (smallest) index
            }
            if (enter == n) return;  // optimal

            std::size_t leave = m;
            Rational best_ratio;
            for (std::size_t r = 0; r < m; ++r) {
                if (t[r][enter] <= 0) continue;
                const Rational ratio = rhs[r] / t[r][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave == m) {
                // Covering LPs are bounded below by 0; unboundedness here
                // means the caller fed us something malformed.
                throw InvariantError("simplex: unbounded objective");
            }
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution solve_min_ge(const std::vector<std::vector<Rational>>& A,
                        const std::vector<Rational>& b,
                        const std::vector<Rational>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();

    // Equality form: A x - s + a = b with surplus s >= 0 and artificials
    // a >= 0 (sign-flip rows with negative b first so rhs stays >= 0).
    const std::size_t total = n + 2 * m;
    Tableau tab;
    tab.m = m;
    tab.n = total;
    tab.t.assign(m, std::vector<Rational>(total, Rational(0)));
    tab.rhs = b;
    tab.basis.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        const int sign = (b[r] < 0) ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tab.t[r][j] = sign * A[r][j];
        tab.t[r][n + r] = Rational(-sign);
        tab.t[r][n + m + r] = 1;
        if (sign < 0) tab.rhs[r] = -b[r];
        tab.basis[r] = n + m + r;
    }

    // Phase 1: drive the artificials to zero.
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t r = 0; r < m; ++r) phase1[n + m + r] = 1;
    std::vector<char> allowed(total, 1);
    tab.minimize(phase1, allowed);

    Rational infeasibility(0);
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] >= n + m) infeasibility += tab.rhs[r];
    }
    if (infeasibility != 0) return {};  // infeasible

    // Phase 2: artificials may linger in the basis at value zero, but they
    // must never re-enter.
    for (std::size_t j = n + m; j < total; ++j) allowed[j] = 0;
    std::vector<Rational> phase2(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    tab.minimize(phase2, allowed);

    LpSolution sol;
    sol.feasible = true;
    sol.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < n) sol.x[tab.basis[r]] = tab.rhs[r];
    }
    sol.objective = 0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += c[j] * sol.x[j];
    return sol;
}

}  // namespace timcomp
