#include "bellspace/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>

#include <json.hpp>

#include "bellspace/correlation.hpp"
#include "bellspace/lhv.hpp"
#include "bellspace/quadrature.hpp"
#include "bellspace/scenario.hpp"

namespace bellspace::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// nullopt on failure after printing the diagnostic.
std::optional<ScenarioFile> load_or_report(const std::string& path, std::ostream& err) {
    try {
        return load_scenario_file(path);
    } catch (const ScenarioError& e) {
        err << e.what() << "\n";
        return std::nullopt;
    }
}

json settings_to_json(const CHSHSettings& s) {
    auto vec = [](const UnitVector3& u) { return json::array({u.x(), u.y(), u.z()}); };
    return json{{"a", vec(s.a)}, {"a_prime", vec(s.a_prime)}, {"b", vec(s.b)},
                {"b_prime", vec(s.b_prime)}};
}

}  // namespace

std::string report_to_json(const Report& r) {
    json j;
    j["g"] = r.g;
    if (r.chsh_at_settings) j["chsh_at_settings"] = *r.chsh_at_settings;
    j["chsh_max"] = r.chsh_max;
    j["local"] = r.local;
    if (r.lhv_feasible) j["lhv_feasible"] = *r.lhv_feasible;
    j["runtime_ms"] = r.runtime_ms;
    return j.dump();
}

Report report_from_json(const std::string& text) {
    const json j = json::parse(text);
    Report r;
    r.g = j.at("g").get<double>();
    if (j.count("chsh_at_settings")) r.chsh_at_settings = j["chsh_at_settings"].get<double>();
    r.chsh_max = j.at("chsh_max").get<double>();
    r.local = j.at("local").get<bool>();
    if (j.count("lhv_feasible")) r.lhv_feasible = j["lhv_feasible"].get<bool>();
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    return r;
}

int run_gfactor(const GFactorOptions& opt, std::ostream& out, std::ostream& err) {
    const auto t0 = Clock::now();
    const auto file = load_or_report(opt.scenario_path, err);
    if (!file) return kExitBadInput;
    Scenario s = to_scenario(*file);

    json j;
    j["method"] = opt.method;
    if (opt.method == "closed") {
        j["g"] = g_factor(s.wave, s.region1, s.region2);
    } else if (opt.method == "quadrature") {
        if (!(opt.tol > 0.0)) {
            err << "--tol must be positive\n";
            return kExitBadInput;
        }
        try {
            j["g"] = g_factor_quadrature(s.wave, s.region1, s.region2, opt.tol);
            j["tol"] = opt.tol;
        } catch (const QuadratureError& e) {
            err << e.what() << " (best estimate " << fmt12(e.best_estimate()) << ", error bound "
                << fmt12(e.error_bound()) << ")\n";
            return kExitNoConvergence;
        }
    } else if (opt.method == "montecarlo") {
        if (!opt.seed) {
            err << "method montecarlo needs --seed so runs are reproducible\n";
            return kExitBadInput;
        }
        try {
            const MonteCarloEstimate est =
                g_factor_montecarlo(s.wave, s.region1, s.region2, opt.n, *opt.seed);
            j["g"] = est.estimate;
            j["std_error"] = est.std_error;
            j["n"] = opt.n;
            j["seed"] = *opt.seed;
        } catch (const std::invalid_argument& e) {
            err << e.what() << "\n";
            return kExitBadInput;
        }
    } else {
        err << "unknown method \"" << opt.method << "\" (closed, quadrature, montecarlo)\n";
        return kExitBadInput;
    }
    j["runtime_ms"] = ms_since(t0);
    out << j.dump() << "\n";
    return kExitOk;
}

int run_chsh(const CHSHOptions& opt, std::ostream& out, std::ostream& err) {
    const auto t0 = Clock::now();
    const auto file = load_or_report(opt.scenario_path, err);
    if (!file) return kExitBadInput;
    Scenario s = to_scenario(*file);

    const double g = g_factor(s.wave, s.region1, s.region2);
    Correlator corr = [g](const UnitVector3& a, const UnitVector3& b) {
        return g * e_spin(a, b);
    };

    Report rep;
    rep.g = g;
    if (file->settings) rep.chsh_at_settings = chsh_value(corr, *file->settings);
    const CHSHMaximum max = chsh_maximize(corr, opt.tol);
    rep.chsh_max = max.value;
    rep.local = g <= kLocalityThreshold;
    rep.runtime_ms = ms_since(t0);

    json j = json::parse(report_to_json(rep));
    j["exceeds_2"] = max.value > 2.0;
    j["max_settings"] = settings_to_json(max.settings);
    out << j.dump() << "\n";
    return kExitOk;
}

int run_lhv(const LHVOptions& opt, std::ostream& out, std::ostream& err) {
    const auto t0 = Clock::now();
    const auto file = load_or_report(opt.scenario_path, err);
    if (!file) return kExitBadInput;
    if (file->settings_a.empty()) {
        err << "scenario has no settings_a/settings_b lists\n";
        return kExitBadInput;
    }
    const int ma = static_cast<int>(file->settings_a.size());
    const int mb = static_cast<int>(file->settings_b.size());
    if (ma > kMaxSettingsPerSide || mb > kMaxSettingsPerSide) {
        err << "too many settings for enumeration: " << ma << "x" << mb << " (limit "
            << kMaxSettingsPerSide << " per side)\n";
        return kExitBudget;
    }
    Scenario s = to_scenario(*file);

    const double g = g_factor(s.wave, s.region1, s.region2);
    const CorrelationTable table = singlet_correlation_table(file->settings_a, file->settings_b, g);
    const MembershipResult res = lhv_membership(table, opt.tol);

    json j;
    j["g"] = g;
    j["rows"] = ma;
    j["cols"] = mb;
    j["lhv_feasible"] = res.feasible;
    j["deviation"] = res.deviation;

    if (!opt.witness_path.empty() && res.feasible) {
        json mixture = json::array();
        for (std::size_t k = 0; k < res.model->weights.size(); ++k) {
            mixture.push_back(json{{"weight", res.model->weights[k]},
                                   {"signs_a", res.model->strategies[k].signs_a},
                                   {"signs_b", res.model->strategies[k].signs_b}});
        }
        json w;
        w["table"] = table.values();
        w["mixture"] = mixture;
        std::ofstream f(opt.witness_path);
        if (!f) {
            err << "cannot write witness file: " << opt.witness_path << "\n";
            return kExitBadInput;
        }
        f << w.dump(2) << "\n";
        j["witness_path"] = opt.witness_path;
    }

    j["runtime_ms"] = ms_since(t0);
    out << j.dump() << "\n";
    return kExitOk;
}

int run_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err) {
    const auto t0 = Clock::now();
    if (opt.param != "half_width" && opt.param != "separation") {
        err << "unknown scan parameter \"" << opt.param << "\" (half_width, separation)\n";
        return kExitBadInput;
    }
    if (!(opt.from < opt.to)) {
        err << "--from must be smaller than --to\n";
        return kExitBadInput;
    }
    if (opt.steps < 2) {
        err << "--steps must be at least 2\n";
        return kExitBadInput;
    }
    if (opt.param == "half_width" && !(opt.from > 0.0)) {
        err << "half_width values must be positive\n";
        return kExitBadInput;
    }
    const auto file = load_or_report(opt.scenario_path, err);
    if (!file) return kExitBadInput;
    const Scenario base = to_scenario(*file);

    std::ofstream csv(opt.out_path);
    if (!csv) {
        err << "cannot open output file: " << opt.out_path << "\n";
        return kExitBadInput;
    }

    const double m = file->inverse_width;
    csv << opt.param << ",g,chsh_max,local\n";

    std::optional<std::pair<double, double>> bracket;
    double prev_val = 0.0;
    double prev_diff = 0.0;
    for (int i = 0; i < opt.steps; ++i) {
        const double val =
            opt.from + (opt.to - opt.from) * static_cast<double>(i) / (opt.steps - 1);

        Scenario s = base;
        if (opt.param == "half_width") {
            s = Scenario{base.wave, BoxRegion::cube(base.wave.packet1.mean, val / m),
                         BoxRegion::cube(base.wave.packet2.mean, val / m)};
        } else {
            // Rigid shift: packet 2 and its box move together, so g stays
            // put while the geometry changes.
            const Vec3 new_mean2 = base.wave.packet1.mean + Vec3{val / m, 0.0, 0.0};
            const Vec3 shift = new_mean2 - base.wave.packet2.mean;
            s = Scenario{ProductWaveFunction{base.wave.packet1, GaussianPacket(new_mean2, m)},
                         base.region1, translate(base.region2, shift)};
        }

        const double g = g_factor(s.wave, s.region1, s.region2);
        Correlator corr = [g](const UnitVector3& a, const UnitVector3& b) {
            return g * e_spin(a, b);
        };
        const double chsh_max = chsh_maximize(corr, opt.tol).value;
        const bool local = g <= kLocalityThreshold;
        csv << fmt12(val) << "," << fmt12(g) << "," << fmt12(chsh_max) << ","
            << (local ? 1 : 0) << "\n";

        const double diff = g - kLocalityThreshold;
        if (i > 0 && !bracket && (diff == 0.0 || (prev_diff < 0.0) != (diff < 0.0))) {
            bracket = {prev_val, val};
        }
        prev_val = val;
        prev_diff = diff;
    }
    if (bracket) {
        csv << "# crossing_bracket," << fmt12(bracket->first) << "," << fmt12(bracket->second)
            << "\n";
    }
    csv.close();

    json j;
    j["rows"] = opt.steps;
    j["out"] = opt.out_path;
    if (bracket) {
        j["crossing_bracket"] = json::array({bracket->first, bracket->second});
    } else {
        j["crossing_bracket"] = nullptr;
    }
    j["runtime_ms"] = ms_since(t0);
    out << j.dump() << "\n";
    return kExitOk;
}

int run_paper(std::ostream& out, std::ostream& err) {
    const auto t0 = Clock::now();
    constexpr double kTwoSqrt2 = 2.8284271247461903;
    json checks;

    // Closed-form spin correlation against the matrix evaluation.
    {
        std::mt19937_64 rng(911);
        auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            UnitVector3 a(u(), u(), u());
            UnitVector3 b(u(), u(), u());
            worst = std::max(worst, std::abs(e_spin(a, b) - e_spin_matrix(a, b)));
        }
        checks["spin_matrix_agrees"] = worst <= 1e-12;
    }

    const Correlator spin_corr = [](const UnitVector3& a, const UnitVector3& b) {
        return e_spin(a, b);
    };
    const double chsh_at_ref = chsh_value(spin_corr, tsirelson_settings());
    checks["tsirelson_at_named_settings"] = std::abs(chsh_at_ref + kTwoSqrt2) <= 1e-9;

    const double spin_max = chsh_maximize(spin_corr, 1e-6).value;
    checks["spin_chsh_max_is_tsirelson"] = std::abs(spin_max - kTwoSqrt2) <= 1e-6;

    const Scenario ref = reference_scenario(1.0);
    const double g = g_factor(ref.wave, ref.region1, ref.region2);
    checks["overlap_in_unit_interval"] = g >= 0.0 && g <= 1.0;

    const OverlapBoundCheck bound = verify_reference_bound(1.0);
    checks["overlap_below_analytic_bound"] = bound.holds;
    checks["analytic_bound_below_threshold"] = bound.bound < kLocalityThreshold;

    double g_quad = 0.0;
    bool quad_ok = true;
    try {
        g_quad = g_factor_quadrature(ref.wave, ref.region1, ref.region2, 1e-10);
    } catch (const QuadratureError& e) {
        quad_ok = false;
        err << "quadrature self-check failed to converge: " << e.what() << "\n";
    }
    checks["quadrature_matches_closed_form"] = quad_ok && std::abs(g_quad - g) <= 1e-10;

    const MonteCarloEstimate mc =
        g_factor_montecarlo(ref.wave, ref.region1, ref.region2, 1000000, 20240817u);
    checks["montecarlo_within_3_sigma"] = std::abs(mc.estimate - g) <= 3.0 * mc.std_error;

    const LocalityVerdict verdict = locality_criterion(ref);
    checks["reference_scenario_is_local"] = verdict.local;

    Correlator full_corr = [g](const UnitVector3& a, const UnitVector3& b) {
        return g * e_spin(a, b);
    };
    const double full_at_ref = chsh_value(full_corr, tsirelson_settings());
    const double full_max = chsh_maximize(full_corr, 1e-6).value;
    checks["full_chsh_scales_with_overlap"] = std::abs(full_max - g * kTwoSqrt2) <= 1e-6;
    checks["no_chsh_violation_when_local"] = full_max <= 2.0;

    const CHSHSettings ts = tsirelson_settings();
    const std::vector<UnitVector3> dirs_a{ts.a, ts.a_prime};
    const std::vector<UnitVector3> dirs_b{ts.b, ts.b_prime};
    const MembershipResult scaled =
        lhv_membership(singlet_correlation_table(dirs_a, dirs_b, g), 1e-9);
    checks["scaled_correlation_is_classical"] = scaled.feasible && scaled.model.has_value();
    const MembershipResult bare =
        lhv_membership(singlet_correlation_table(dirs_a, dirs_b, 1.0), 1e-9);
    checks["bare_correlation_is_not_classical"] = !bare.feasible;

    const double w = criterion_threshold(1.0, 1e-8);
    const GaussianPacket origin_packet({0.0, 0.0, 0.0}, 1.0);
    const double rp = region_probability(origin_packet, BoxRegion::cube({0.0, 0.0, 0.0}, w));
    checks["threshold_hits_criterion"] = std::abs(rp * rp - kLocalityThreshold) <= 1e-7;

    const double cond =
        conditional_spin_region_probability(ref.wave.packet1, ref.region1, ref.region1);
    checks["conditional_spin_probability_half"] = std::abs(cond - 0.5) <= 1e-12;

    bool all = true;
    for (const auto& kv : checks.items()) all = all && kv.value().get<bool>();

    json j;
    j["g"] = g;
    j["g_quadrature"] = g_quad;
    j["g_montecarlo"] = mc.estimate;
    j["mc_std_error"] = mc.std_error;
    j["chsh_at_settings"] = full_at_ref;
    j["chsh_max"] = full_max;
    j["spin_chsh_max"] = spin_max;
    j["local"] = verdict.local;
    j["lhv_feasible"] = scaled.feasible;
    j["analytic_bound"] = bound.bound;
    j["locality_threshold"] = kLocalityThreshold;
    j["threshold_half_width"] = w;
    j["checks"] = checks;
    j["all_passed"] = all;
    j["runtime_ms"] = ms_since(t0);
    out << j.dump(2) << "\n";
    return all ? kExitOk : kExitCheckFailed;
}

}  // namespace bellspace::cli
