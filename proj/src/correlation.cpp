#include "bellspace/correlation.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

namespace bellspace {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGolden = 0.61803398874989485;  // (sqrt(5) - 1) / 2

// theta, phi pairs for (a, a', b, b')
using AngleState = std::array<double, 8>;

UnitVector3 from_angles(double theta, double phi) {
    const double st = std::sin(theta);
    return UnitVector3(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

CHSHSettings to_settings(const AngleState& s) {
    return {from_angles(s[0], s[1]), from_angles(s[2], s[3]), from_angles(s[4], s[5]),
            from_angles(s[6], s[7])};
}

template <typename F>
double golden_max(const F& f, double lo, double hi) {
    double c = hi - kGolden * (hi - lo);
    double d = lo + kGolden * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < 60 && hi - lo > 1e-11; ++i) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kGolden * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kGolden * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Scenario reference_scenario(double inverse_width) {
    const double scale = 1.0 / inverse_width;
    GaussianPacket p1({0.0, 0.0, 0.0}, inverse_width);
    GaussianPacket p2({10.0 * scale, 0.0, 0.0}, inverse_width);
    return {ProductWaveFunction{p1, p2}, BoxRegion::cube(p1.mean, scale),
            BoxRegion::cube(p2.mean, scale)};
}

double e_full(const Scenario& s, const UnitVector3& a, const UnitVector3& b) {
    return g_factor(s.wave, s.region1, s.region2) * e_spin(a, b);
}

double chsh_value(const Correlator& correlator, const CHSHSettings& s) {
    return correlator(s.a, s.b) - correlator(s.a, s.b_prime) + correlator(s.a_prime, s.b) +
           correlator(s.a_prime, s.b_prime);
}

CHSHSettings tsirelson_settings() {
    const double c = 0.70710678118654757;
    return {UnitVector3(1.0, 0.0, 0.0), UnitVector3(0.0, 1.0, 0.0), UnitVector3(c, c, 0.0),
            UnitVector3(-c, c, 0.0)};
}

CHSHMaximum chsh_maximize(const Correlator& correlator, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("optimizer tolerance must be positive");

    double best_sample = -1.0;  // largest objective value seen anywhere
    auto objective = [&](const AngleState& s) {
        const double v = std::abs(chsh_value(correlator, to_settings(s)));
        if (v > best_sample) best_sample = v;
        return v;
    };

    constexpr int kStarts = 32;
    constexpr int kCoarse = 24;
    const double step = 2.0 * kPi / kCoarse;
    const double gain_stop = std::max(tol * 1e-3, 1e-12);

    std::optional<AngleState> best_angles;
    double best_value = -1.0;

    for (int start = 0; start < kStarts; ++start) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(start));
        auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

        AngleState angles;
        for (int k = 0; k < 4; ++k) {
            angles[2 * k] = std::acos(1.0 - 2.0 * uniform());
            angles[2 * k + 1] = 2.0 * kPi * uniform();
        }
        double current = objective(angles);

        for (int sweep = 0; sweep < 300; ++sweep) {
            const double before = current;
            for (int k = 0; k < 8; ++k) {
                auto eval_at = [&](double x) {
                    AngleState probe = angles;
                    probe[k] = x;
                    return objective(probe);
                };
                // Coarse grid over one full period, anchored on the current
                // value so the step can never regress.
                const double x0 = angles[k];
                double best_x = x0;
                double best_f = current;
                for (int s = 0; s < kCoarse; ++s) {
                    const double x = x0 + (s - kCoarse / 2) * step;
                    const double v = eval_at(x);
                    if (v > best_f) {
                        best_f = v;
                        best_x = x;
                    }
                }
                const double refined = golden_max(eval_at, best_x - step, best_x + step);
                const double fr = eval_at(refined);
                if (fr > best_f) {
                    best_f = fr;
                    best_x = refined;
                }
                angles[k] = best_x;
                current = best_f;
            }
            if (current - before <= gain_stop) break;
        }

        if (current > best_value) {
            best_value = current;
            best_angles = angles;
        }
    }

    // Consistency tripwire: the merged maximum must dominate every sampled
    // objective value, otherwise the descent lost ground somewhere.
    if (best_value + 1e-9 < best_sample) {
        throw std::runtime_error("optimizer stuck: merged maximum below a sampled value");
    }
    return {to_settings(*best_angles), best_value};
}

LocalityVerdict locality_criterion(const Scenario& s) {
    const double g = g_factor(s.wave, s.region1, s.region2);
    return {g, g <= kLocalityThreshold};
}

double half_width_for_overlap(double inverse_width, double target_g, double tol) {
    if (!(inverse_width > 0.0)) throw std::invalid_argument("inverse width must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!(target_g > 0.0 && target_g < 1.0)) {
        throw std::invalid_argument("target overlap must lie strictly between 0 and 1");
    }

    // Work in u = w * m: both packets contribute the same cube probability,
    // so g(u) = P(cube of half width u sigma)^2, strictly increasing in u.
    GaussianPacket p({0.0, 0.0, 0.0}, inverse_width);
    auto g_of = [&](double u) {
        const double rp = region_probability(p, BoxRegion::cube({0.0, 0.0, 0.0}, u / inverse_width));
        return rp * rp;
    };

    double lo = 0.0;
    double hi = 1.0;
    while (g_of(hi) < target_g) {
        hi *= 2.0;
        if (hi > 1e6) throw std::runtime_error("overlap target not reached by any box");
    }
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g_of(mid) < target_g ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double criterion_threshold(double inverse_width, double tol) {
    return half_width_for_overlap(inverse_width, kLocalityThreshold, tol);
}

OverlapBoundCheck verify_reference_bound(double inverse_width) {
    const Scenario s = reference_scenario(inverse_width);
    const double g = g_factor(s.wave, s.region1, s.region2);
    const double bound = std::pow(2.0 / kPi, 3.0);
    return {g, bound, g < bound};
}

}  // namespace bellspace
