#ifndef TIMCOMP_SIMPLEX_HPP
#define TIMCOMP_SIMPLEX_HPP

#include <vector>

#include "timcomp/rational.hpp"

namespace timcomp {

/// Outcome of an exact-arithmetic linear program.
struct LpSolution {
    bool feasible = false;
    Rational objective;        // meaningful only when feasible
    std::vector<Rational> x;   // primal solution, one entry per column
};

/**
 * Solves  min c^T x  subject to  A x >= b, x >= 0  in exact rational
 * arithmetic with a dense two-phase simplex. Bland's rule (smallest index
 * entering, smallest ratio then smallest basic index leaving) guarantees
 * termination. Intended for the small covering LPs this library produces,
 * not for general-purpose use.
 */
LpSolution solve_min_ge(const std::vector<std::vector<Rational>>& A,
                        const std::vector<Rational>& b,
                        const std::vector<Rational>& c);

}  // namespace timcomp

#endif  // TIMCOMP_SIMPLEX_HPP
