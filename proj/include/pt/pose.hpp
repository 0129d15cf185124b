#pragma once

#include <array>
#include <cmath>

#include "pt/vec3.hpp"

namespace pt {

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return Mat3{}; }

    double operator()(int r, int c) const { return m[3 * r + c]; }
    double& operator()(int r, int c) { return m[3 * r + c]; }

    Vec3 col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }
    Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }

    static Mat3 from_cols(const Vec3& x, const Vec3& y, const Vec3& z) {
        Mat3 r;
        r.m = {x.x, y.x, z.x, x.y, y.y, z.y, x.z, y.z, z.z};
        return r;
    }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j) + (*this)(i, 2) * o(2, j);
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    bool operator==(const Mat3& o) const { return m == o.m; }
};

Mat3 rot_x(double angle_rad);
Mat3 rot_y(double angle_rad);
Mat3 rot_z(double angle_rad);
Mat3 rot_axis_angle(const Vec3& axis, double angle_rad);
Mat3 quat_to_mat(double w, double x, double y, double z);

// Max deviation of R^T R from identity plus |det - 1|.
double orthonormality_defect(const Mat3& r);

// Gram-Schmidt on the columns.
Mat3 reorthonormalized(const Mat3& r);

// Rigid transform: p -> rotation * p + translation.
// Composition re-orthonormalizes the rotation whenever the defect exceeds
// 1e-9, so long chains do not drift.
struct Pose {
    Mat3 rotation;
    Vec3 translation;

    static Pose identity() { return Pose{}; }

    Vec3 apply_point(const Vec3& p) const { return rotation * p + translation; }
    Vec3 apply_dir(const Vec3& d) const { return rotation * d; }

    Pose compose(const Pose& o) const;  // this * o
    Pose inverse() const;

    Vec3 x_axis() const { return rotation.col(0); }
    Vec3 y_axis() const { return rotation.col(1); }
    Vec3 z_axis() const { return rotation.col(2); }

    bool operator==(const Pose& o) const {
        return rotation == o.rotation && translation == o.translation;
    }
};

bool is_valid_rotation(const Mat3& r, double tol = 1e-9);

}  // namespace pt
