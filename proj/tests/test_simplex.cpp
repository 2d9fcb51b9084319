#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcm/simplex.hpp"

using lcm::LpProblem;
using lcm::LpStatus;

TEST_CASE("basic minimization") {
    // minimize -x - y s.t. x + y <= 4, x <= 3, y <= 2.
    LpProblem lp;
    lp.c = {-1, -1};
    lp.add_constraint({1, 1}, 4);
    lp.add_constraint({1, 0}, 3);
    lp.add_constraint({0, 1}, 2);
    auto sol = lcm::solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-4.0));
    CHECK(sol.x[0] + sol.x[1] == doctest::Approx(4.0));
}

TEST_CASE("negative right-hand sides force phase one") {
    // minimize x + y s.t. x + y >= 3 (i.e. -x - y <= -3), x <= 5, y <= 5.
    LpProblem lp;
    lp.c = {1, 1};
    lp.add_constraint({-1, -1}, -3);
    lp.add_constraint({1, 0}, 5);
    lp.add_constraint({0, 1}, 5);
    auto sol = lcm::solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(3.0));
}

TEST_CASE("infeasible program is reported") {
    // x <= 1 and x >= 2 conflict.
    LpProblem lp;
    lp.c = {1};
    lp.add_constraint({1}, 1);
    lp.add_constraint({-1}, -2);
    auto sol = lcm::solve_lp(lp);
    CHECK(sol.status == LpStatus::Infeasible);
    CHECK(sol.infeasible_row >= 0);
}

TEST_CASE("unbounded program is reported") {
    LpProblem lp;
    lp.c = {-1};
    lp.add_constraint({-1}, 0);  // x >= 0 only
    auto sol = lcm::solve_lp(lp);
    CHECK(sol.status == LpStatus::Unbounded);
}

TEST_CASE("degenerate ties terminate under Bland's rule") {
    LpProblem lp;
    lp.c = {-0.75, 150, -0.02, 6};
    lp.add_constraint({0.25, -60, -0.04, 9}, 0);
    lp.add_constraint({0.5, -90, -0.02, 3}, 0);
    lp.add_constraint({0, 0, 1, 0}, 1);
    auto sol = lcm::solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-0.05));
}

TEST_CASE("equality via paired inequalities") {
    // minimize x + 2y with x + y = 1 (two inequalities), both nonnegative.
    LpProblem lp;
    lp.c = {1, 2};
    lp.add_constraint({1, 1}, 1);
    lp.add_constraint({-1, -1}, -1);
    auto sol = lcm::solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.x[0] == doctest::Approx(1.0));
    CHECK(sol.x[1] == doctest::Approx(0.0));
}
