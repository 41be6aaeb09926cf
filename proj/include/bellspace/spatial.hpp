#pragma once

#include <cstdint>

#include "bellspace/geometry.hpp"

namespace bellspace {

// Standard normal CDF via erfc; keeps relative accuracy deep in the tails.
double norm_cdf(double x);

// P(alpha < Z < beta) for standard normal Z, arranged so that two nearly
// equal tail values are never subtracted from each other. Clamped to [0,1];
// returns 0 when beta <= alpha.
double normal_interval_probability(double alpha, double beta);

// Isotropic Gaussian packet with position density
//   |psi(r)|^2 = (m^2 / 2 pi)^(3/2) exp(-m^2 (r - mean)^2 / 2),
// i.e. per-axis standard deviation 1/m.
struct GaussianPacket {
    GaussianPacket(const Vec3& mean, double inverse_width);

    Vec3 mean;
    double inverse_width;  // m > 0
};

// Two independent packets: phi(r1, r2) = psi1(r1) psi2(r2).
struct ProductWaveFunction {
    GaussianPacket packet1;
    GaussianPacket packet2;
};

// Box standing in for "all of space": +-1e8 / m. The mass outside is far
// below machine epsilon, and the integrators clip to a few dozen sigma.
inline constexpr double kAllSpaceExtent = 1e8;
BoxRegion all_space(double inverse_width);

// P(r in region) for one packet: product of three one-axis normal interval
// probabilities.
double region_probability(const GaussianPacket& p, const BoxRegion& r);

// Overlap factor g(O1, O2) = integral of |phi|^2 over O1 x O2. For a product
// wave function this factorizes into the two single-particle probabilities.
double g_factor(const ProductWaveFunction& w, const BoxRegion& r1, const BoxRegion& r2);

// The same integral done as six adaptive one-axis quadratures; the
// independent check on the closed form. Result is within tol of the true
// value or QuadratureError is thrown (carrying the best estimate).
double g_factor_quadrature(const ProductWaveFunction& w, const BoxRegion& r1, const BoxRegion& r2,
                           double tol);

struct MonteCarloEstimate {
    double estimate;
    double std_error;  // sqrt(p (1-p) / n)
};

// Statistical route: n >= 1000 samples of (r1, r2) from |phi|^2, hit fraction
// in r1 x r2. Sampling is mt19937_64 driven with an explicit Box-Muller
// transform, so a seed fully determines the estimate on a given platform.
MonteCarloEstimate g_factor_montecarlo(const ProductWaveFunction& w, const BoxRegion& r1,
                                       const BoxRegion& r2, std::int64_t n, std::uint64_t seed);

// P(spin up along a AND particle in o1 | particle in d1) for one side of the
// singlet. The spin marginal is 1/2 for every direction, so the direction
// drops out: 1/2 * P(o1) / P(d1). Requires o1 contained in d1.
double conditional_spin_region_probability(const GaussianPacket& p, const BoxRegion& o1,
                                           const BoxRegion& d1);

}  // namespace bellspace
