#include "bellspace/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "bellspace/quadrature.hpp"

namespace bellspace {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654757;
constexpr double kInvSqrt2Pi = 0.39894228040143268;  // 1 / sqrt(2 pi)

// Integration window half-width in units of sigma; the normal tail beyond
// 40 sigma is below 1e-300, invisible at any tolerance we accept.
constexpr double kClipSigma = 40.0;

double axis_probability(double mean, double m, double lo, double hi) {
    return normal_interval_probability(m * (lo - mean), m * (hi - mean));
}

struct AxisIntegral {
    double value;
    double error;
    bool converged;
};

AxisIntegral axis_quadrature(double mean, double m, double lo, double hi, double abs_tol) {
    const double sigma = 1.0 / m;
    const double a = std::max(lo, mean - kClipSigma * sigma);
    const double b = std::min(hi, mean + kClipSigma * sigma);
    if (!(a < b)) return {0.0, 0.0, true};  // box entirely in the far tail

    std::vector<double> pts{a, b};
    for (double k : {-40.0, -20.0, -10.0, -5.0, -2.0, -1.0, 0.0, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        const double x = mean + k * sigma;
        if (a < x && x < b) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());

    auto density = [mean, m](double x) {
        const double u = m * (x - mean);
        return m * kInvSqrt2Pi * std::exp(-0.5 * u * u);
    };
    QuadratureResult r = integrate_adaptive(density, std::move(pts), abs_tol);
    return {r.value, r.error_bound, r.converged};
}

}  // namespace

double norm_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_interval_probability(double alpha, double beta) {
    if (!(beta > alpha)) return 0.0;
    double p;
    if (alpha >= 0.0) {
        p = 0.5 * (std::erfc(alpha * kInvSqrt2) - std::erfc(beta * kInvSqrt2));
    } else if (beta <= 0.0) {
        p = 0.5 * (std::erfc(-beta * kInvSqrt2) - std::erfc(-alpha * kInvSqrt2));
    } else {
        p = 0.5 * (std::erf(beta * kInvSqrt2) + std::erf(-alpha * kInvSqrt2));
    }
    return std::clamp(p, 0.0, 1.0);
}

GaussianPacket::GaussianPacket(const Vec3& mean_, double inverse_width_)
    : mean(mean_), inverse_width(inverse_width_) {
    if (!(inverse_width > 0.0) || !std::isfinite(inverse_width)) {
        throw std::invalid_argument("packet inverse width must be positive and finite");
    }
}

BoxRegion all_space(double inverse_width) {
    if (!(inverse_width > 0.0)) throw std::invalid_argument("inverse width must be positive");
    const double ext = kAllSpaceExtent / inverse_width;
    return BoxRegion({-ext, -ext, -ext}, {ext, ext, ext});
}

double region_probability(const GaussianPacket& p, const BoxRegion& r) {
    const double m = p.inverse_width;
    return axis_probability(p.mean.x, m, r.lo().x, r.hi().x) *
           axis_probability(p.mean.y, m, r.lo().y, r.hi().y) *
           axis_probability(p.mean.z, m, r.lo().z, r.hi().z);
}

double g_factor(const ProductWaveFunction& w, const BoxRegion& r1, const BoxRegion& r2) {
    return region_probability(w.packet1, r1) * region_probability(w.packet2, r2);
}

double g_factor_quadrature(const ProductWaveFunction& w, const BoxRegion& r1, const BoxRegion& r2,
                           double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");

    // Six independent one-axis integrals; per-axis budget tol/12 keeps the
    // summed bound at tol/2 (axis values never exceed 1, so the product
    // error is bounded by the sum of the axis errors).
    const double axis_tol = tol / 12.0;
    const AxisIntegral axes[6] = {
        axis_quadrature(w.packet1.mean.x, w.packet1.inverse_width, r1.lo().x, r1.hi().x, axis_tol),
        axis_quadrature(w.packet1.mean.y, w.packet1.inverse_width, r1.lo().y, r1.hi().y, axis_tol),
        axis_quadrature(w.packet1.mean.z, w.packet1.inverse_width, r1.lo().z, r1.hi().z, axis_tol),
        axis_quadrature(w.packet2.mean.x, w.packet2.inverse_width, r2.lo().x, r2.hi().x, axis_tol),
        axis_quadrature(w.packet2.mean.y, w.packet2.inverse_width, r2.lo().y, r2.hi().y, axis_tol),
        axis_quadrature(w.packet2.mean.z, w.packet2.inverse_width, r2.lo().z, r2.hi().z, axis_tol),
    };

    double value = 1.0;
    double bound = 0.0;
    bool ok = true;
    for (const AxisIntegral& ax : axes) {
        value *= ax.value;
        bound += ax.error;
        ok = ok && ax.converged;
    }
    if (!ok || bound > tol) {
        throw QuadratureError("quadrature interval budget exhausted before reaching tolerance",
                              value, bound);
    }
    return value;
}

MonteCarloEstimate g_factor_montecarlo(const ProductWaveFunction& w, const BoxRegion& r1,
                                       const BoxRegion& r2, std::int64_t n, std::uint64_t seed) {
    if (n < 1000) throw std::invalid_argument("monte carlo needs at least 1000 samples");

    std::mt19937_64 rng(seed);
    // (0, 1] uniforms from the top 53 bits; log stays finite.
    auto uniform = [&rng] { return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; };
    // Box-Muller, spelled out: std::normal_distribution is not pinned down
    // by the standard, and identical seeds must give identical estimates.
    double spare = 0.0;
    bool have_spare = false;
    auto normal = [&]() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        const double radius = std::sqrt(-2.0 * std::log(uniform()));
        const double angle = 6.2831853071795865 * uniform();
        spare = radius * std::sin(angle);
        have_spare = true;
        return radius * std::cos(angle);
    };

    auto sample_in = [&](const GaussianPacket& p, const BoxRegion& r) {
        const double s = 1.0 / p.inverse_width;
        const double x = p.mean.x + s * normal();
        const double y = p.mean.y + s * normal();
        const double z = p.mean.z + s * normal();
        return r.lo().x <= x && x <= r.hi().x && r.lo().y <= y && y <= r.hi().y &&
               r.lo().z <= z && z <= r.hi().z;
    };

    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        const bool in1 = sample_in(w.packet1, r1);
        const bool in2 = sample_in(w.packet2, r2);
        if (in1 && in2) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

double conditional_spin_region_probability(const GaussianPacket& p, const BoxRegion& o1,
                                           const BoxRegion& d1) {
    if (!contains(d1, o1)) {
        throw std::invalid_argument("conditioning region must contain the detector region");
    }
    const double denom = region_probability(p, d1);
    if (denom < 1e-300) {
        throw std::domain_error("conditioning event has vanishing probability");
    }
    return 0.5 * region_probability(p, o1) / denom;
}

}  // namespace bellspace
