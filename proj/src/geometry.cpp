#include "bellspace/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace bellspace {

UnitVector3::UnitVector3(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n == 0.0 || !std::isfinite(n)) {
        throw std::invalid_argument("direction must be a nonzero finite vector");
    }
    x_ = x / n;
    y_ = y / n;
    z_ = z / n;
}

UnitVector3 make_unit(double x, double y, double z) { return UnitVector3(x, y, z); }

double dot(const UnitVector3& u, const UnitVector3& v) {
    const double d = u.x() * v.x() + u.y() * v.y() + u.z() * v.z();
    return std::clamp(d, -1.0, 1.0);
}

BoxRegion::BoxRegion(const Vec3& lo, const Vec3& hi) : lo_(lo), hi_(hi) {
    if (!(lo.x < hi.x && lo.y < hi.y && lo.z < hi.z)) {
        throw std::invalid_argument("box needs lo < hi on every axis");
    }
}

BoxRegion BoxRegion::cube(const Vec3& center, double half_width) {
    if (!(half_width > 0.0)) {
        throw std::invalid_argument("cube half width must be positive");
    }
    const Vec3 h{half_width, half_width, half_width};
    return BoxRegion(center - h, center + h);
}

double BoxRegion::volume() const {
    return (hi_.x - lo_.x) * (hi_.y - lo_.y) * (hi_.z - lo_.z);
}

BoxRegion translate(const BoxRegion& r, const Vec3& shift) {
    return BoxRegion(r.lo() + shift, r.hi() + shift);
}

bool contains(const BoxRegion& outer, const BoxRegion& inner) {
    return outer.lo().x <= inner.lo().x && inner.hi().x <= outer.hi().x &&
           outer.lo().y <= inner.lo().y && inner.hi().y <= outer.hi().y &&
           outer.lo().z <= inner.lo().z && inner.hi().z <= outer.hi().z;
}

}  // namespace bellspace
