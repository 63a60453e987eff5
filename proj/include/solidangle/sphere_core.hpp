// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "solidangle/solid_angle.hpp"
#include "solidangle/unit_vector.hpp"
#include "solidangle/vec3.hpp"

namespace solidangle {

// Corner geometry on the unit sphere.
//
// Conventions used throughout the library:
//  - directions are unit vectors from the sphere centre;
//  - a corner is an ordered triple (prev, curr, next) of such directions,
//    traversed in that order;
//  - turn angles are the signed exterior angles of the traversal, positive
//    where the path bends left as seen from outside the sphere. The sign is
//    carried by the scalar triple product prev . (curr x next).

// The four scalar products every corner formula consumes:
//   a = prev.next, b = prev.curr, c = curr.next, d = prev.(curr x next).
// They satisfy d^2 = 1 + 2abc - a^2 - b^2 - c^2 up to rounding, and
// (bc - a)^2 + d^2 = (1 - b^2)(1 - c^2).
struct CornerQuantities {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

CornerQuantities corner_quantities(const UnitVector& prev,
                                   const UnitVector& curr,
                                   const UnitVector& next);

// Signed exterior turn angle at a corner, in (-pi, pi]:
//   delta = atan2(d, bc - a).
// Throws std::invalid_argument when an adjacent side is degenerate, i.e.
// curr coincides with or opposes one of its neighbours (|b| or |c| is 1 to
// double precision).
double corner_turn_angle(const CornerQuantities& q);

// Signed turn angle between one-sided tangents tau_minus (incoming) and
// tau_plus (outgoing) at a point on the sphere, in (-pi, pi]. Radial
// components of the tangents are projected out first, so callers may pass
// raw curve derivatives. The sign follows point.(tau_minus x tau_plus);
// anti-parallel tangents (a cusp) give +pi. Throws std::invalid_argument
// when a tangent is zero or purely radial.
double tangent_turn_angle(const UnitVector& point, const Vec3& tau_minus, const Vec3& tau_plus);

// Solid angle of a circular cap of half-aperture theta:
//   omega = 2 pi (1 - cos theta),  theta in [0, pi].
// Monotone increasing, 0 at theta = 0, full sphere at theta = pi.
// Throws std::domain_error outside [0, pi].
SolidAngle spherical_cap_solid_angle(double theta);

}  // namespace solidangle
