#pragma once

#include <array>
#include <complex>

#include "bellspace/geometry.hpp"

namespace bellspace {

using cdouble = std::complex<double>;

// 2x2 / 4x4 complex matrices, row-major. Just enough linear algebra for the
// spin observables below, not a general matrix library.
struct Mat2 {
    std::array<cdouble, 4> a{};
    cdouble operator()(int r, int c) const { return a[2 * r + c]; }
    cdouble& operator()(int r, int c) { return a[2 * r + c]; }
};

struct Mat4 {
    std::array<cdouble, 16> a{};
    cdouble operator()(int r, int c) const { return a[4 * r + c]; }
    cdouble& operator()(int r, int c) { return a[4 * r + c]; }
};

Mat4 operator*(const Mat4& lhs, const Mat4& rhs);

// sigma . u in the standard basis: [[uz, ux - i uy], [ux + i uy, -uz]].
Mat2 pauli_dot(const UnitVector3& u);

// Left factor acts on the first qubit: out(2a+b, 2c+d) = l(a,c) * r(b,d).
Mat4 kronecker(const Mat2& l, const Mat2& r);

// Two-qubit pure state, amplitudes in the |00>,|01>,|10>,|11> order.
struct SpinState {
    std::array<cdouble, 4> amplitudes{};
};

// (|01> - |10>) / sqrt(2)
SpinState singlet();

struct SpinObservable {
    Mat4 matrix;
};

// sigma.a (x) sigma.b
SpinObservable joint_observable(const UnitVector3& a, const UnitVector3& b);

// Singlet correlation <sigma.a (x) sigma.b>; closed form -a.b.
double e_spin(const UnitVector3& a, const UnitVector3& b);

// The same expectation evaluated as <psi| M |psi> with explicit complex
// arithmetic. Slower, exists as an independent cross-check of e_spin.
double e_spin_matrix(const UnitVector3& a, const UnitVector3& b);

}  // namespace bellspace
