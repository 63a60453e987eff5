// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace solidangle {

// Plain 3-vector over double. Small value type, passed by value or const ref.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Vec3 operator+(const Vec3& u, const Vec3& v) {
    return {u.x + v.x, u.y + v.y, u.z + v.z};
}

constexpr Vec3 operator-(const Vec3& u, const Vec3& v) {
    return {u.x - v.x, u.y - v.y, u.z - v.z};
}

constexpr Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
constexpr Vec3 operator*(const Vec3& v, double s) { return s * v; }

constexpr double dot(const Vec3& u, const Vec3& v) {
    return u.x * v.x + u.y * v.y + u.z * v.z;
}

constexpr Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u.y * v.z - u.z * v.y,
            u.z * v.x - u.x * v.z,
            u.x * v.y - u.y * v.x};
}

// Scalar triple product u . (v x w).
constexpr double triple(const Vec3& u, const Vec3& v, const Vec3& w) {
    return dot(u, cross(v, w));
}

inline double squared_norm(const Vec3& v) { return dot(v, v); }

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

}  // namespace solidangle
