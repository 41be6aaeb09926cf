#include "bellspace/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bellspace {

namespace {
// Entering test: a stalled reduced cost leaves its variable stuck at a value
// of roughly the same size, so this has to sit well below the feasibility
// tolerances of the callers (1e-9-ish) while staying clear of z-row roundoff
// (~1e-14 for O(1)-scaled data after tens of pivots).
constexpr double kCostEps = 1e-11;
constexpr double kPivotEps = 1e-11;  // column entry usable as a pivot
}

LPSolution solve_lp(const std::vector<std::vector<double>>& constraint_matrix,
                    const std::vector<double>& rhs, const std::vector<double>& objective,
                    long max_iterations) {
    const int m = static_cast<int>(constraint_matrix.size());
    const int n = static_cast<int>(objective.size());
    if (m < 1 || n < 1) throw std::invalid_argument("empty linear program");
    if (static_cast<int>(rhs.size()) != m) throw std::invalid_argument("rhs size mismatch");
    for (const auto& row : constraint_matrix) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("constraint row size mismatch");
        }
    }

    long budget = max_iterations > 0 ? max_iterations : 5000L + 50L * (m + n);

    const int total = n + m;  // original columns + one artificial per row
    const int rc = total;     // rhs column index
    std::vector<std::vector<double>> T(m, std::vector<double>(total + 1, 0.0));
    double b_scale = 1.0;
    for (int i = 0; i < m; ++i) {
        const double sign = rhs[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) T[i][j] = sign * constraint_matrix[i][j];
        T[i][rc] = sign * rhs[i];
        T[i][n + i] = 1.0;
        b_scale = std::max(b_scale, std::abs(rhs[i]));
    }

    std::vector<int> basis(m);
    std::iota(basis.begin(), basis.end(), n);
    std::vector<double> z(total + 1, 0.0);  // reduced costs; z[rc] = -objective

    auto pivot = [&](int prow, int pcol) {
        const double piv = T[prow][pcol];
        for (int j = 0; j <= total; ++j) T[prow][j] /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == prow) continue;
            const double f = T[r][pcol];
            if (f == 0.0) continue;
            for (int j = 0; j <= total; ++j) T[r][j] -= f * T[prow][j];
            T[r][pcol] = 0.0;
        }
        const double zf = z[pcol];
        if (zf != 0.0) {
            for (int j = 0; j <= total; ++j) z[j] -= zf * T[prow][j];
            z[pcol] = 0.0;
        }
        basis[prow] = pcol;
    };

    auto reset_costs = [&](const std::vector<double>& cost) {
        for (int j = 0; j < total; ++j) z[j] = cost[j];
        z[rc] = 0.0;
        for (int i = 0; i < m; ++i) {
            const double cb = cost[basis[i]];
            if (cb == 0.0) continue;
            for (int j = 0; j <= total; ++j) z[j] -= cb * T[i][j];
        }
    };

    // Bland's rule both ways: smallest eligible entering index; among the
    // minimum-ratio rows, the one whose basic variable has the smallest index.
    auto run = [&](int allowed_cols) -> LPStatus {
        while (true) {
            if (--budget < 0) {
                throw std::runtime_error("LP did not terminate within the iteration budget");
            }
            int enter = -1;
            for (int j = 0; j < allowed_cols; ++j) {
                if (z[j] < -kCostEps) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return LPStatus::optimal;

            double min_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                if (T[i][enter] > kPivotEps) {
                    min_ratio = std::min(min_ratio, T[i][rc] / T[i][enter]);
                }
            }
            if (!std::isfinite(min_ratio)) return LPStatus::unbounded;

            // The tie window only needs to absorb roundoff: genuinely tied
            // (degenerate) ratios agree to the last bit, while treating
            // near-ties as ties would let the wrong row win and push the true
            // minimum's basic variable negative by the ratio difference.
            int leave = -1;
            const double ratio_slack = 1e-12 * (1.0 + std::abs(min_ratio));
            for (int i = 0; i < m; ++i) {
                if (T[i][enter] > kPivotEps && T[i][rc] / T[i][enter] <= min_ratio + ratio_slack) {
                    if (leave < 0 || basis[i] < basis[leave]) leave = i;
                }
            }
            pivot(leave, enter);
        }
    };

    std::vector<double> phase1_cost(total, 0.0);
    for (int j = n; j < total; ++j) phase1_cost[j] = 1.0;
    reset_costs(phase1_cost);
    if (run(total) != LPStatus::optimal) return {LPStatus::infeasible, {}, 0.0};
    const double residual = -z[rc];
    if (residual > 1e-8 * (1.0 + b_scale)) return {LPStatus::infeasible, {}, 0.0};

    // Drive leftover artificials out of the basis where possible; rows where
    // it is not possible are all-zero (redundant) and stay inert.
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        for (int j = 0; j < n; ++j) {
            if (std::abs(T[i][j]) > 1e-9) {
                pivot(i, j);
                break;
            }
        }
    }

    std::vector<double> phase2_cost(total, 0.0);
    for (int j = 0; j < n; ++j) phase2_cost[j] = objective[j];
    reset_costs(phase2_cost);
    const LPStatus st = run(n);
    if (st == LPStatus::unbounded) return {LPStatus::unbounded, {}, 0.0};

    LPSolution sol;
    sol.status = LPStatus::optimal;
    sol.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) sol.x[basis[i]] = std::max(0.0, T[i][rc]);
    }
    sol.objective = std::inner_product(objective.begin(), objective.end(), sol.x.begin(), 0.0);
    return sol;
}

}  // namespace bellspace
