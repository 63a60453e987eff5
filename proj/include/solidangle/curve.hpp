// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "solidangle/errors.hpp"
#include "solidangle/solid_angle.hpp"
#include "solidangle/unit_vector.hpp"
#include "solidangle/vec3.hpp"

namespace solidangle {

struct QuadratureConfig {
    double tolerance = 1e-9;  // absolute tolerance on the whole line integral
    int max_depth = 20;       // adaptive bisection levels per smooth segment
};

// Closed directed curve given by callbacks.
//
// The curve L(t) need not lie on the unit sphere and the parameterization
// need not be arc length; the result only depends on the central projection
// of L onto the sphere, so the curve must stay away from the origin and its
// projected velocity must not vanish. Traversal is counterclockwise, seen
// from outside the sphere, around the region whose solid angle is reported.
//
// corner_params lists parameters where the direction may jump; position must
// be C2 everywhere else, including across the t_begin/t_end seam unless that
// point is itself listed as a corner.
struct CurveCallbacks {
    std::function<Vec3(double)> position;
    std::function<Vec3(double)> first_derivative;
    std::function<Vec3(double)> second_derivative;
    double t_begin = 0.0;
    double t_end = 1.0;
    std::vector<double> corner_params;  // strictly increasing, within [t_begin, t_end]
};

// Geodesic-curvature line integrand at parameter t, per unit of t:
//   |L1 x L2| / |L1|^2,  with s = L/|L|,
//   L1 = L' - s (s.L'),  L2 = L'' - s (s.L'').
// Nonnegative; identically zero where the projected curve follows a great
// circle. Throws std::invalid_argument if the curve passes through the
// origin or the projected velocity L1 vanishes (stationary point).
double curvature_integrand(const CurveCallbacks& curve, double t);

// Solid angle enclosed by the projection of the curve onto the unit sphere:
// 2 pi, minus the turn angles at declared corners, minus the line integral
// of curvature_integrand over the smooth segments, folded into [0, 4pi].
//
// One-sided tangents at a corner are taken from first_derivative evaluated
// a relative offset of 1e-7 of the domain length to either side, then
// projected onto the tangent plane at the corner point. Each smooth segment
// is integrated by adaptive Simpson quadrature with budget
// config.tolerance / segment_count; QuadratureError is thrown if the budget
// cannot be met within config.max_depth levels.
SolidAngle curve_solid_angle(const CurveCallbacks& curve, const QuadratureConfig& config = {});

// Polyline of points on the sphere. corner_flags, when present, marks the
// samples known to be genuine corners of the underlying curve; it is carried
// for bookkeeping and does not change the estimate (every sample acts as a
// vertex). Must be empty or match samples in length.
//
// At least 3 samples are required; dense sampling (hundreds of points) is
// what makes the estimate meaningful for smooth curves, with error falling
// off as the square of the sample count.
struct SampledCurve {
    std::vector<UnitVector> samples;
    std::vector<bool> corner_flags;
};

// Geodesic-interpolation estimate: consecutive samples are joined by
// great-circle arcs and the resulting spherical polygon evaluated exactly.
SolidAngle sampled_curve_solid_angle(const SampledCurve& curve);

}  // namespace solidangle
