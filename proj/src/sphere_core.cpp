// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#include "solidangle/sphere_core.hpp"

#include <cmath>
#include <stdexcept>

namespace solidangle {

CornerQuantities corner_quantities(const UnitVector& prev,
                                   const UnitVector& curr,
                                   const UnitVector& next) {
    CornerQuantities q;
    q.a = dot(prev.vec(), next.vec());
    q.b = dot(prev.vec(), curr.vec());
    q.c = dot(curr.vec(), next.vec());
    q.d = triple(prev.vec(), curr.vec(), next.vec());
    return q;
}

double corner_turn_angle(const CornerQuantities& q) {
    // (bc - a)^2 + d^2 = (1 - b^2)(1 - c^2): a side collapsing to a point or
    // to half a great circle drives the factor to zero and the angle becomes
    // meaningless.
    if (!(1.0 - q.b * q.b > 0.0) || !(1.0 - q.c * q.c > 0.0)) {
        throw std::invalid_argument(
            "degenerate corner: a side connects coincident or antipodal directions");
    }
    return std::atan2(q.d, q.b * q.c - q.a);
}

double tangent_turn_angle(const UnitVector& point, const Vec3& tau_minus, const Vec3& tau_plus) {
    const Vec3& p = point.vec();
    const Vec3 tm = tau_minus - dot(p, tau_minus) * p;
    const Vec3 tp = tau_plus - dot(p, tau_plus) * p;

    constexpr double min_rel = 1e-12;  // tangent shorter than this fraction is radial noise
    if (!(squared_norm(tm) > min_rel * min_rel * squared_norm(tau_minus)) ||
        !(squared_norm(tp) > min_rel * min_rel * squared_norm(tau_plus))) {
        throw std::invalid_argument("zero or purely radial tangent at corner");
    }

    // tm and tp both lie in the tangent plane, so tm x tp is radial and its
    // signed magnitude along p is exactly what atan2 needs.
    double s = triple(p, tm, tp);
    if (s == 0.0) s = 0.0;  // map -0 to +0: anti-parallel tangents give +pi
    return std::atan2(s, dot(tm, tp));
}

SolidAngle spherical_cap_solid_angle(double theta) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw std::domain_error("cap half-aperture must lie in [0, pi]");
    }
    return SolidAngle(kTwoPi * (1.0 - std::cos(theta)));
}

}  // namespace solidangle
