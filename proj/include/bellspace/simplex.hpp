#pragma once

#include <vector>

namespace bellspace {

enum class LPStatus { optimal, infeasible, unbounded };

struct LPSolution {
    LPStatus status = LPStatus::infeasible;
    std::vector<double> x;
    double objective = 0.0;
};

// Minimize c.x subject to A x = b, x >= 0. Dense two-phase primal simplex
// with Bland's smallest-index rule, so it terminates on degenerate problems.
// Sized for the small feasibility programs the lhv module builds, not for
// anything large. max_iterations = 0 picks a budget from the problem size;
// exceeding it throws std::runtime_error, which Bland's rule should make
// unreachable.
LPSolution solve_lp(const std::vector<std::vector<double>>& constraint_matrix,
                    const std::vector<double>& rhs, const std::vector<double>& objective,
                    long max_iterations = 0);

}  // namespace bellspace
