#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellspace {

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    int intervals = 0;
    bool converged = false;
};

// Carries the best estimate alongside the failure so callers can still
// report what the integrator had when the budget ran out.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const { return best_estimate_; }
    double error_bound() const { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

inline constexpr int kDefaultIntervalBudget = 10000;

// Globally adaptive Gauss-Kronrod (7,15) integration of f over
// [breakpoints.front(), breakpoints.back()]. The interval with the largest
// error estimate is bisected until the summed estimate drops below abs_tol
// or the interval budget is exhausted (converged = false then; no throw at
// this layer). Breakpoints must be finite and sorted; they seed the initial
// subdivision so that narrow features far from panel midpoints are not
// silently missed by the 15-point rule.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::vector<double> breakpoints, double abs_tol,
                                    int max_intervals = kDefaultIntervalBudget);

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_intervals = kDefaultIntervalBudget);

}  // namespace bellspace
