#pragma once

#include <optional>
#include <vector>

#include "bellspace/geometry.hpp"

namespace bellspace {

// Fixed +/-1 outcome for every setting on each side; the extreme points of
// the local correlation polytope.
struct DeterministicStrategy {
    std::vector<int> signs_a;
    std::vector<int> signs_b;
};

inline constexpr int kMaxSettingsPerSide = 12;

// Every sign assignment for m_a x m_b settings, deduplicated under the
// global flip (s, t) -> (-s, -t), which generates the same correlation
// matrix: signs_a[0] is pinned to +1, leaving 2^(m_a + m_b - 1) strategies.
// Counts grow exponentially; the per-side cap of 12 is a budget guard, and
// anything near it is already impractical for the membership LP.
std::vector<DeterministicStrategy> enumerate_strategies(int m_a, int m_b);

// Finite-setting correlation matrix P(a_i, b_j). Entries must lie in [-1, 1]
// (within 1e-12); direction labels are optional and carried along only for
// reporting — membership depends on the values alone.
class CorrelationTable {
public:
    explicit CorrelationTable(std::vector<std::vector<double>> values);
    CorrelationTable(std::vector<UnitVector3> settings_a, std::vector<UnitVector3> settings_b,
                     std::vector<std::vector<double>> values);

    int rows() const { return static_cast<int>(values_.size()); }
    int cols() const { return static_cast<int>(values_.front().size()); }
    const std::vector<std::vector<double>>& values() const { return values_; }
    const std::vector<UnitVector3>& settings_a() const { return settings_a_; }
    const std::vector<UnitVector3>& settings_b() const { return settings_b_; }

private:
    std::vector<UnitVector3> settings_a_;
    std::vector<UnitVector3> settings_b_;
    std::vector<std::vector<double>> values_;
};

// Table with entries scale * (singlet correlation of a_i, b_j).
CorrelationTable singlet_correlation_table(std::vector<UnitVector3> settings_a,
                                           std::vector<UnitVector3> settings_b, double scale);

// Convex weights over deterministic strategies: an explicit classical model
// of a correlation table.
struct LHVModel {
    std::vector<double> weights;
    std::vector<DeterministicStrategy> strategies;
};

// Mixture matrix sum_k w_k signs_a[i] signs_b[j].
std::vector<std::vector<double>> reconstruct(const LHVModel& model);

struct MembershipResult {
    bool feasible = false;
    std::optional<LHVModel> model;
    // Smallest achievable max-norm distance between the table and a strategy
    // mixture; 0 (up to LP arithmetic) inside the polytope.
    double deviation = 0.0;
};

// Decides membership of the table in the local correlation polytope. A
// linear program minimizes the largest entrywise deviation over convex
// strategy weights; the table is representable iff the optimum is <= tol.
// Feasible results carry a witness that reconstructs the table within tol
// (checked before returning).
MembershipResult lhv_membership(const CorrelationTable& t, double tol = 1e-9);

// Largest of the eight CHSH combinations of a 2x2 table. A value <= 2 is
// necessary for membership; for tables with entries in [-1, 1] it is also
// sufficient, so this is a fast equivalent of lhv_membership there.
double chsh_facet_check(const CorrelationTable& t);

}  // namespace bellspace
