#include "bellspace/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace bellspace {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654757;
}

Mat4 operator*(const Mat4& lhs, const Mat4& rhs) {
    Mat4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            cdouble s = 0.0;
            for (int k = 0; k < 4; ++k) s += lhs(r, k) * rhs(k, c);
            out(r, c) = s;
        }
    }
    return out;
}

Mat2 pauli_dot(const UnitVector3& u) {
    Mat2 m;
    m(0, 0) = {u.z(), 0.0};
    m(0, 1) = {u.x(), -u.y()};
    m(1, 0) = {u.x(), u.y()};
    m(1, 1) = {-u.z(), 0.0};
    return m;
}

Mat4 kronecker(const Mat2& l, const Mat2& r) {
    Mat4 out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = l(a, c) * r(b, d);
    return out;
}

SpinState singlet() {
    SpinState s;
    s.amplitudes = {cdouble{0.0}, cdouble{kInvSqrt2}, cdouble{-kInvSqrt2}, cdouble{0.0}};
    return s;
}

SpinObservable joint_observable(const UnitVector3& a, const UnitVector3& b) {
    return {kronecker(pauli_dot(a), pauli_dot(b))};
}

double e_spin(const UnitVector3& a, const UnitVector3& b) { return -dot(a, b); }

double e_spin_matrix(const UnitVector3& a, const UnitVector3& b) {
    const Mat4 m = joint_observable(a, b).matrix;
    const SpinState psi = singlet();
    cdouble e = 0.0;
    for (int r = 0; r < 4; ++r) {
        cdouble row = 0.0;
        for (int c = 0; c < 4; ++c) row += m(r, c) * psi.amplitudes[c];
        e += std::conj(psi.amplitudes[r]) * row;
    }
    if (std::abs(e.imag()) > 1e-12) {
        throw std::logic_error("spin expectation came out non-real");
    }
    return e.real();
}

}  // namespace bellspace
