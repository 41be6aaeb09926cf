#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "bellspace/simplex.hpp"

using namespace bellspace;

TEST_CASE("small LP with slacks finds the vertex optimum") {
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6  ->  x = 1.6, y = 1.2
    const std::vector<std::vector<double>> a{{1, 2, 1, 0}, {3, 1, 0, 1}};
    const std::vector<double> b{4, 6};
    const std::vector<double> c{-1, -1, 0, 0};
    const LPSolution s = solve_lp(a, b, c);
    REQUIRE(s.status == LPStatus::optimal);
    CHECK(s.x[0] == doctest::Approx(1.6).epsilon(1e-10));
    CHECK(s.x[1] == doctest::Approx(1.2).epsilon(1e-10));
    CHECK(s.objective == doctest::Approx(-2.8).epsilon(1e-10));
}

TEST_CASE("equality-only program") {
    // x + y = 1, minimize x  ->  (0, 1)
    const LPSolution s = solve_lp({{1, 1}}, {1}, {1, 0});
    REQUIRE(s.status == LPStatus::optimal);
    CHECK(s.x[0] == doctest::Approx(0.0));
    CHECK(s.x[1] == doctest::Approx(1.0));
}

TEST_CASE("negative right-hand sides are handled by row negation") {
    // -x - y = -3 with x, y >= 0 is x + y = 3
    const LPSolution s = solve_lp({{-1, -1}}, {-3}, {0, 1});
    REQUIRE(s.status == LPStatus::optimal);
    CHECK(s.x[0] == doctest::Approx(3.0));
    CHECK(s.x[1] == doctest::Approx(0.0));
}

TEST_CASE("infeasibility is detected") {
    // x + y = -1 has no nonnegative solution
    CHECK(solve_lp({{1, 1}}, {-1}, {1, 1}).status == LPStatus::infeasible);
    // x = 2 and x = 3 cannot both hold
    CHECK(solve_lp({{1}, {1}}, {2, 3}, {1}).status == LPStatus::infeasible);
}

TEST_CASE("unboundedness is detected") {
    // x - y = 0, minimize -x: the ray x = y = t
    CHECK(solve_lp({{1, -1}}, {0}, {-1, 0}).status == LPStatus::unbounded);
}

TEST_CASE("degenerate zero rhs does not stall") {
    // x + s = 0 forces x = 0 even while minimizing -x
    const LPSolution s = solve_lp({{1, 1}}, {0}, {-1, 0});
    REQUIRE(s.status == LPStatus::optimal);
    CHECK(s.x[0] == doctest::Approx(0.0));
    CHECK(s.objective == doctest::Approx(0.0));
}

TEST_CASE("Beale's cycling example terminates under Bland's rule") {
    const std::vector<std::vector<double>> a{
        {0.25, -60.0, -0.04, 9.0, 1.0, 0.0, 0.0},
        {0.5, -90.0, -0.02, 3.0, 0.0, 1.0, 0.0},
        {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0},
    };
    const std::vector<double> b{0.0, 0.0, 1.0};
    const std::vector<double> c{-0.75, 150.0, -0.02, 6.0, 0.0, 0.0, 0.0};
    const LPSolution s = solve_lp(a, b, c);
    REQUIRE(s.status == LPStatus::optimal);
    CHECK(s.objective == doctest::Approx(-0.05).epsilon(1e-9));
}

TEST_CASE("iteration budget error is reachable when forced") {
    const std::vector<std::vector<double>> a{{1, 2, 1, 0}, {3, 1, 0, 1}};
    CHECK_THROWS_WITH_AS(solve_lp(a, {4, 6}, {-1, -1, 0, 0}, 1),
                         "LP did not terminate within the iteration budget", std::runtime_error);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(solve_lp({}, {}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_lp({{1, 1}}, {1, 2}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_lp({{1}}, {1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("random feasible programs: solutions satisfy their constraints") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> pos(0.0, 3.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 3, n = 6;
        std::vector<std::vector<double>> a(m, std::vector<double>(n));
        std::vector<double> x0(n), c(n), b(m, 0.0);
        for (double& v : x0) v = pos(rng);
        for (double& v : c) v = u(rng);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                a[i][j] = u(rng);
                b[i] += a[i][j] * x0[j];
            }
        }
        const LPSolution s = solve_lp(a, b, c);
        REQUIRE(s.status != LPStatus::infeasible);  // x0 is a feasible point
        if (s.status != LPStatus::optimal) continue;

        double dot_c = 0.0;
        for (int j = 0; j < n; ++j) {
            CHECK(s.x[j] >= -1e-12);
            dot_c += c[j] * x0[j];
        }
        CHECK(s.objective <= dot_c + 1e-8);  // no worse than the known point
        for (int i = 0; i < m; ++i) {
            double lhs = 0.0;
            for (int j = 0; j < n; ++j) lhs += a[i][j] * s.x[j];
            CHECK(lhs == doctest::Approx(b[i]).epsilon(1e-8));
        }
    }
}
