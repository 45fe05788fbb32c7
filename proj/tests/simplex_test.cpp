#include <doctest.h>

#include <vector>

#include "timcomp/rational.hpp"
#include "timcomp/simplex.hpp"

using namespace timcomp;
using Matrix = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

namespace {

// Checks that a reported solution actually satisfies A x >= b, x >= 0 and
// reproduces the objective value exactly.
void check_primal(const LpSolution& sol, const Matrix& A, const Vec& b,
                  const Vec& c) {
    REQUIRE(sol.feasible);
    REQUIRE(sol.x.size() == c.size());
    Rational obj = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        CHECK(sol.x[j] >= 0);
        obj += c[j] * sol.x[j];
    }
    CHECK(obj == sol.objective);
    for (std::size_t i = 0; i < A.size(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < c.size(); ++j) lhs += A[i][j] * sol.x[j];
        CHECK(lhs >= b[i]);
    }
}

}  // namespace

TEST_CASE("single variable lower bound") {
    const Matrix A = {{1}};
    const Vec b = {3}, c = {1};
    const LpSolution sol = solve_min_ge(A, b, c);
    check_primal(sol, A, b, c);
    CHECK(sol.objective == 3);
    CHECK(sol.x[0] == 3);
}

TEST_CASE("two variables with a slack-only optimum") {
    // min 2x + 3y  s.t.  x + y >= 2, x >= 1  ->  x = 2, y = 0.
    const Matrix A = {{1, 1}, {1, 0}};
    const Vec b = {2, 1}, c = {2, 3};
    const LpSolution sol = solve_min_ge(A, b, c);
    check_primal(sol, A, b, c);
    CHECK(sol.objective == 4);
    CHECK(sol.x == Vec{2, 0});
}

TEST_CASE("fractional optimum stays exact") {
    // min x1 + x2  s.t.  2x1 + x2 >= 2, x1 + 2x2 >= 2  ->  x1 = x2 = 2/3.
    const Matrix A = {{2, 1}, {1, 2}};
    const Vec b = {2, 2}, c = {1, 1};
    const LpSolution sol = solve_min_ge(A, b, c);
    check_primal(sol, A, b, c);
    CHECK(sol.objective == Rational(4, 3));
    CHECK(sol.x[0] == Rational(2, 3));
    CHECK(sol.x[1] == Rational(2, 3));
}

TEST_CASE("infeasible system is reported") {
    // 0 * x >= 1 can never hold.
    const LpSolution sol = solve_min_ge({{0}}, {1}, {1});
    CHECK(!sol.feasible);
}

TEST_CASE("redundant and trivially satisfied rows are harmless") {
    const Matrix A = {{1, 1}, {1, 1}, {0, 0}};
    const Vec b = {1, 1, -5}, c = {1, 2};
    const LpSolution sol = solve_min_ge(A, b, c);
    check_primal(sol, A, b, c);
    CHECK(sol.objective == 1);
    CHECK(sol.x == Vec{1, 0});
}

TEST_CASE("degenerate covering LP with big rational coefficients") {
    // min sum x  s.t. each unit row >= 1/7; optimum puts 1/7 everywhere.
    const Matrix A = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const Vec b = {Rational(1, 7), Rational(1, 7), Rational(1, 7)};
    const Vec c = {1, 1, 1};
    const LpSolution sol = solve_min_ge(A, b, c);
    check_primal(sol, A, b, c);
    CHECK(sol.objective == Rational(3, 7));
}

TEST_CASE("zero right-hand side allows the zero solution") {
    const LpSolution sol = solve_min_ge({{1, 1}}, {0}, {1, 1});
    REQUIRE(sol.feasible);
    CHECK(sol.objective == 0);
}
