#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace bellspace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;    // a self-test inequality failed
inline constexpr int kExitBadInput = 2;       // missing/malformed scenario or output path
inline constexpr int kExitNoConvergence = 3;  // quadrature budget exhausted
inline constexpr int kExitBudget = 4;         // enumeration budget exceeded

// Core result block shared by the report-emitting commands. Optional fields
// appear in the JSON only when they were computed.
struct Report {
    double g = 0.0;
    std::optional<double> chsh_at_settings;
    double chsh_max = 0.0;
    bool local = false;
    std::optional<bool> lhv_feasible;
    std::int64_t runtime_ms = 0;
};

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);

struct GFactorOptions {
    std::string scenario_path;
    std::string method = "closed";  // closed | quadrature | montecarlo
    double tol = 1e-10;             // quadrature
    std::int64_t n = 1000000;       // montecarlo sample count
    std::optional<std::uint64_t> seed;
};
int run_gfactor(const GFactorOptions& opt, std::ostream& out, std::ostream& err);

struct CHSHOptions {
    std::string scenario_path;
    double tol = 1e-6;  // optimizer
};
int run_chsh(const CHSHOptions& opt, std::ostream& out, std::ostream& err);

struct LHVOptions {
    std::string scenario_path;
    double tol = 1e-9;         // membership
    std::string witness_path;  // optional sidecar with the explicit mixture
};
int run_lhv(const LHVOptions& opt, std::ostream& out, std::ostream& err);

struct ScanOptions {
    std::string scenario_path;
    std::string param;  // half_width | separation, in units of 1/m
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::string out_path;
    double tol = 1e-6;  // optimizer
};
int run_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err);

// Self-test of the published numbers on the reference scenario; exits 0 only
// if every check holds. The JSON lists each check by name.
int run_paper(std::ostream& out, std::ostream& err);

}  // namespace bellspace::cli
