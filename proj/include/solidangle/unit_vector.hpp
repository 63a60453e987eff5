// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

#include "solidangle/vec3.hpp"

namespace solidangle {

// Direction on the unit sphere.
//
// The checked constructors accept vectors already within 1e-6 of unit norm
// and renormalize them; larger deviations are rejected so that silently
// mis-scaled data cannot enter geometric code. Arbitrary directions (for
// example raw file input) go through normalize(), which only rejects
// vectors too short to carry a direction.
class UnitVector {
public:
    static constexpr double kNormSlack = 1e-6;
    static constexpr double kMinDirectionNorm = 1e-12;

    UnitVector(double x, double y, double z) : UnitVector(Vec3{x, y, z}) {}

    explicit UnitVector(const Vec3& v) : v_(v) {
        const double n = norm(v_);
        if (!(n >= 1.0 - kNormSlack && n <= 1.0 + kNormSlack)) {
            throw std::invalid_argument("vector norm deviates from 1 by more than 1e-6");
        }
        v_ = (1.0 / n) * v_;
    }

    static UnitVector normalize(const Vec3& v) {
        const double n = norm(v);
        if (!(n > kMinDirectionNorm)) {
            throw std::invalid_argument("cannot normalize a (near-)zero vector");
        }
        UnitVector u;
        u.v_ = (1.0 / n) * v;
        return u;
    }

    const Vec3& vec() const { return v_; }
    operator const Vec3&() const { return v_; }

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

private:
    UnitVector() = default;

    Vec3 v_{1.0, 0.0, 0.0};
};

inline double dot(const UnitVector& u, const UnitVector& v) { return dot(u.vec(), v.vec()); }
inline Vec3 cross(const UnitVector& u, const UnitVector& v) { return cross(u.vec(), v.vec()); }

}  // namespace solidangle
