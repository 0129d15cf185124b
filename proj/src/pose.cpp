#include "pt/pose.hpp"

#include <algorithm>
#include <ostream>

namespace pt {

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

Mat3 rot_x(double a) {
    double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {1, 0, 0, 0, c, -s, 0, s, c};
    return r;
}

Mat3 rot_y(double a) {
    double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {c, 0, s, 0, 1, 0, -s, 0, c};
    return r;
}

Mat3 rot_z(double a) {
    double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {c, -s, 0, s, c, 0, 0, 0, 1};
    return r;
}

Mat3 rot_axis_angle(const Vec3& axis, double a) {
    Vec3 u = normalized(axis);
    double c = std::cos(a), s = std::sin(a), t = 1.0 - c;
    Mat3 r;
    r.m = {c + u.x * u.x * t,       u.x * u.y * t - u.z * s, u.x * u.z * t + u.y * s,
           u.y * u.x * t + u.z * s, c + u.y * u.y * t,       u.y * u.z * t - u.x * s,
           u.z * u.x * t - u.y * s, u.z * u.y * t + u.x * s, c + u.z * u.z * t};
    return r;
}

Mat3 quat_to_mat(double w, double x, double y, double z) {
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n; x /= n; y /= n; z /= n;
    Mat3 r;
    r.m = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
           2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
           2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
    return r;
}

double orthonormality_defect(const Mat3& r) {
    Mat3 g = r.transposed() * r;
    double defect = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double target = (i == j) ? 1.0 : 0.0;
            defect = std::max(defect, std::abs(g(i, j) - target));
        }
    return defect + std::abs(r.det() - 1.0);
}

Mat3 reorthonormalized(const Mat3& r) {
    Vec3 x = normalized(r.col(0));
    Vec3 y = r.col(1);
    y = normalized(y - x * dot(x, y));
    Vec3 z = cross(x, y);
    return Mat3::from_cols(x, y, z);
}

bool is_valid_rotation(const Mat3& r, double tol) { return orthonormality_defect(r) <= tol; }

Pose Pose::compose(const Pose& o) const {
    Pose out;
    out.rotation = rotation * o.rotation;
    out.translation = rotation * o.translation + translation;
    if (orthonormality_defect(out.rotation) > 1e-9)
        out.rotation = reorthonormalized(out.rotation);
    return out;
}

Pose Pose::inverse() const {
    Pose out;
    out.rotation = rotation.transposed();
    out.translation = -(out.rotation * translation);
    return out;
}

}  // namespace pt
