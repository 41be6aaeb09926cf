#pragma once

#include <functional>

#include "bellspace/geometry.hpp"
#include "bellspace/spatial.hpp"
#include "bellspace/spin.hpp"

namespace bellspace {

inline constexpr double kLocalityThreshold = 0.70710678118654757;  // 1/sqrt(2)

struct CHSHSettings {
    UnitVector3 a;
    UnitVector3 a_prime;
    UnitVector3 b;
    UnitVector3 b_prime;
};

// Measurement layout: two localized packets and one detector box per side.
struct Scenario {
    ProductWaveFunction wave;
    BoxRegion region1;
    BoxRegion region2;
};

// The canonical demo: packets at the origin and at (10/m, 0, 0) (separation
// large against the 1/m packet width), one half-width-1/m cube on each mean.
Scenario reference_scenario(double inverse_width = 1.0);

// Spatially resolved correlation E(a, O1, b, O2) = g(O1, O2) * e_spin(a, b).
double e_full(const Scenario& s, const UnitVector3& a, const UnitVector3& b);

using Correlator = std::function<double(const UnitVector3&, const UnitVector3&)>;

// P(a,b) - P(a,b') + P(a',b) + P(a',b')
double chsh_value(const Correlator& correlator, const CHSHSettings& s);

// In-plane settings with pairwise cosines sqrt(2)/2 that drive the bare
// singlet correlation to |CHSH| = 2 sqrt(2).
CHSHSettings tsirelson_settings();

struct CHSHMaximum {
    CHSHSettings settings;
    double value;  // max over settings of |chsh_value|
};

// Maximizes |CHSH| over all four directions: 32 deterministic random starts,
// coordinate descent in spherical angles with a coarse scan plus golden
// section refinement per coordinate. Deterministic across runs.
CHSHMaximum chsh_maximize(const Correlator& correlator, double tol);

struct LocalityVerdict {
    double g;
    bool local;  // g <= 1/sqrt(2), boundary counts as local
};

LocalityVerdict locality_criterion(const Scenario& s);

// Smallest half-width w (in units of 1/m) of the symmetric cube pair
// centered on the packet means at which g reaches target_g; bisection,
// |result - root| <= tol. target_g must lie strictly in (0, 1).
double half_width_for_overlap(double inverse_width, double target_g, double tol);

// half_width_for_overlap at the locality threshold 1/sqrt(2).
double criterion_threshold(double inverse_width, double tol);

struct OverlapBoundCheck {
    double g;
    double bound;  // (2/pi)^3
    bool holds;    // g < bound
};

// g of the reference scenario against its analytic ceiling (2/pi)^3.
OverlapBoundCheck verify_reference_bound(double inverse_width = 1.0);

}  // namespace bellspace
