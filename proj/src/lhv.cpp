#include "bellspace/lhv.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "bellspace/simplex.hpp"
#include "bellspace/spin.hpp"

namespace bellspace {

namespace {
constexpr double kEntrySlack = 1e-12;

void validate_values(const std::vector<std::vector<double>>& v) {
    if (v.empty() || v.front().empty()) {
        throw std::invalid_argument("correlation table must be non-empty");
    }
    const std::size_t cols = v.front().size();
    for (const auto& row : v) {
        if (row.size() != cols) throw std::invalid_argument("correlation table must be rectangular");
        for (double x : row) {
            if (!(std::abs(x) <= 1.0 + kEntrySlack)) {
                throw std::invalid_argument("correlation entries must lie in [-1, 1]");
            }
        }
    }
}
}  // namespace

std::vector<DeterministicStrategy> enumerate_strategies(int m_a, int m_b) {
    if (m_a < 1 || m_b < 1) throw std::invalid_argument("need at least one setting per side");
    if (m_a > kMaxSettingsPerSide || m_b > kMaxSettingsPerSide) {
        throw std::invalid_argument("scenario too large for enumeration (12 settings per side max)");
    }
    const unsigned na = 1u << (m_a - 1);
    const unsigned nb = 1u << m_b;
    std::vector<DeterministicStrategy> out;
    out.reserve(static_cast<std::size_t>(na) * nb);
    for (unsigned sa = 0; sa < na; ++sa) {
        for (unsigned sb = 0; sb < nb; ++sb) {
            DeterministicStrategy s;
            s.signs_a.resize(m_a);
            s.signs_b.resize(m_b);
            s.signs_a[0] = 1;
            for (int i = 1; i < m_a; ++i) s.signs_a[i] = (sa >> (i - 1)) & 1u ? -1 : 1;
            for (int j = 0; j < m_b; ++j) s.signs_b[j] = (sb >> j) & 1u ? -1 : 1;
            out.push_back(std::move(s));
        }
    }
    return out;
}

CorrelationTable::CorrelationTable(std::vector<std::vector<double>> values)
    : values_(std::move(values)) {
    validate_values(values_);
}

CorrelationTable::CorrelationTable(std::vector<UnitVector3> settings_a,
                                   std::vector<UnitVector3> settings_b,
                                   std::vector<std::vector<double>> values)
    : settings_a_(std::move(settings_a)), settings_b_(std::move(settings_b)),
      values_(std::move(values)) {
    validate_values(values_);
    if (settings_a_.size() != values_.size() || settings_b_.size() != values_.front().size()) {
        throw std::invalid_argument("setting labels do not match table shape");
    }
}

CorrelationTable singlet_correlation_table(std::vector<UnitVector3> settings_a,
                                           std::vector<UnitVector3> settings_b, double scale) {
    if (!(std::abs(scale) <= 1.0 + kEntrySlack)) {
        throw std::invalid_argument("scale must lie in [-1, 1]");
    }
    std::vector<std::vector<double>> v(settings_a.size(),
                                       std::vector<double>(settings_b.size(), 0.0));
    for (std::size_t i = 0; i < settings_a.size(); ++i) {
        for (std::size_t j = 0; j < settings_b.size(); ++j) {
            v[i][j] = scale * e_spin(settings_a[i], settings_b[j]);
        }
    }
    return CorrelationTable(std::move(settings_a), std::move(settings_b), std::move(v));
}

std::vector<std::vector<double>> reconstruct(const LHVModel& model) {
    if (model.weights.size() != model.strategies.size()) {
        throw std::invalid_argument("model weights and strategies differ in length");
    }
    if (model.strategies.empty()) throw std::invalid_argument("model has no strategies");
    const std::size_t ma = model.strategies.front().signs_a.size();
    const std::size_t mb = model.strategies.front().signs_b.size();
    std::vector<std::vector<double>> out(ma, std::vector<double>(mb, 0.0));
    for (std::size_t k = 0; k < model.strategies.size(); ++k) {
        const DeterministicStrategy& s = model.strategies[k];
        if (s.signs_a.size() != ma || s.signs_b.size() != mb) {
            throw std::invalid_argument("strategies have inconsistent shapes");
        }
        const double w = model.weights[k];
        if (w < 0.0) throw std::invalid_argument("model weights must be nonnegative");
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < ma; ++i) {
            for (std::size_t j = 0; j < mb; ++j) {
                out[i][j] += w * s.signs_a[i] * s.signs_b[j];
            }
        }
    }
    return out;
}

MembershipResult lhv_membership(const CorrelationTable& t, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("membership tolerance must be positive");

    const int ma = t.rows();
    const int mb = t.cols();
    const int entries = ma * mb;
    std::vector<DeterministicStrategy> strategies = enumerate_strategies(ma, mb);
    const int ns = static_cast<int>(strategies.size());

    // Variables: strategy weights (ns), max deviation tvar (1), then one
    // slack and one surplus per entry. Rows per entry e:
    //   sum_k V_ke w_k - tvar + u_e = T_e
    //   sum_k V_ke w_k + tvar - v_e = T_e
    // plus sum_k w_k = 1. Minimizing tvar gives the polytope distance.
    const int tvar = ns;
    const int ncols = ns + 1 + 2 * entries;
    const int nrows = 2 * entries + 1;
    std::vector<std::vector<double>> A(nrows, std::vector<double>(ncols, 0.0));
    std::vector<double> b(nrows, 0.0);

    for (int i = 0; i < ma; ++i) {
        for (int j = 0; j < mb; ++j) {
            const int e = i * mb + j;
            for (int k = 0; k < ns; ++k) {
                const double vk = strategies[k].signs_a[i] * strategies[k].signs_b[j];
                A[e][k] = vk;
                A[entries + e][k] = vk;
            }
            A[e][tvar] = -1.0;
            A[e][ns + 1 + e] = 1.0;
            A[entries + e][tvar] = 1.0;
            A[entries + e][ns + 1 + entries + e] = -1.0;
            b[e] = t.values()[i][j];
            b[entries + e] = t.values()[i][j];
        }
    }
    for (int k = 0; k < ns; ++k) A[2 * entries][k] = 1.0;
    b[2 * entries] = 1.0;

    std::vector<double> c(ncols, 0.0);
    c[tvar] = 1.0;

    const LPSolution sol = solve_lp(A, b, c);
    if (sol.status != LPStatus::optimal) {
        throw std::logic_error("membership LP failed although it is feasible by construction");
    }

    MembershipResult result;
    result.deviation = std::max(0.0, sol.objective);
    result.feasible = result.deviation <= tol;
    if (!result.feasible) return result;

    LHVModel model;
    for (int k = 0; k < ns; ++k) {
        const double w = sol.x[k];
        if (w > 0.0) {
            model.weights.push_back(w);
            model.strategies.push_back(strategies[k]);
        }
    }
    const auto recon = reconstruct(model);
    double err = 0.0;
    for (int i = 0; i < ma; ++i) {
        for (int j = 0; j < mb; ++j) {
            err = std::max(err, std::abs(recon[i][j] - t.values()[i][j]));
        }
    }
    if (err > tol) throw std::logic_error("feasible witness failed to reconstruct its table");
    result.model = std::move(model);
    return result;
}

double chsh_facet_check(const CorrelationTable& t) {
    if (t.rows() != 2 || t.cols() != 2) {
        throw std::invalid_argument("CHSH facet check needs a 2x2 table");
    }
    const auto& v = t.values();
    const double total = v[0][0] + v[0][1] + v[1][0] + v[1][1];
    double best = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            best = std::max(best, std::abs(total - 2.0 * v[i][j]));
        }
    }
    return best;
}

}  // namespace bellspace
