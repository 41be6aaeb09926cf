#pragma once

#include <stdexcept>

namespace bellspace {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

// Direction on the unit sphere. Normalized on construction; the zero vector
// (or anything non-finite) is rejected, so downstream code never re-checks.
class UnitVector3 {
public:
    UnitVector3(double x, double y, double z);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

private:
    double x_;
    double y_;
    double z_;
};

UnitVector3 make_unit(double x, double y, double z);

// Clamped to [-1, 1] so that downstream trigonometry never sees 1 + eps.
double dot(const UnitVector3& u, const UnitVector3& v);

// Axis-aligned box with lo < hi on every axis (strictly positive volume).
class BoxRegion {
public:
    BoxRegion(const Vec3& lo, const Vec3& hi);

    static BoxRegion cube(const Vec3& center, double half_width);

    const Vec3& lo() const { return lo_; }
    const Vec3& hi() const { return hi_; }
    double volume() const;

private:
    Vec3 lo_;
    Vec3 hi_;
};

BoxRegion translate(const BoxRegion& r, const Vec3& shift);

// Closed-set containment: inner may share faces with outer.
bool contains(const BoxRegion& outer, const BoxRegion& inner);

}  // namespace bellspace
