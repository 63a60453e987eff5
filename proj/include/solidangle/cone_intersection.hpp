// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "solidangle/solid_angle.hpp"
#include "solidangle/unit_vector.hpp"

namespace solidangle {

// Solid angle of the intersection of two circular cones sharing an apex.
//
// Geometry glossary, used by all helpers below. For two cones with
// half-apertures theta1, theta2 and axis separation alpha, the rims
// intersect in at most two points; those points and the apex span a plane
// ("chord plane") containing both rim crossings. For cone i:
//   gamma_i  angle from the cone axis to the chord plane, signed positive
//            toward the other axis; gamma1 + gamma2 = alpha.
//   phi_i    half the dihedral wedge of the cone's cap that lies beyond the
//            chord plane.
//   beta_i   half the great-circle arc between the two rim crossings as seen
//            along the rim of cone i.
// These satisfy cos(phi) cos(gamma) = cos(beta) cos(theta) for every genuine
// crossing configuration.

// Validated parameter set: theta1, theta2 in (0, pi), alpha in [0, pi],
// all finite. Angles are radians.
struct ConePair {
    ConePair(double theta1, double theta2, double alpha);

    double theta1;
    double theta2;
    double alpha;
};

// t_y, t_x are the building blocks of the chord-plane angle for one cone:
// gamma = atan2(t_y, t_x) with
//   t_y = cos(theta_other) - cos(alpha) cos(theta_own),
//   t_x = sin(alpha) cos(theta_own).
struct PlaneAngleIntermediates {
    double t_y = 0.0;
    double t_x = 0.0;
};

struct PlaneAngles {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
};

// Cap-segment description for one cone. phi and beta are the (clamped)
// wedge and arc half-angles defined above; clamped_high / clamped_low record
// whether the cos ratios saturated at +1 / -1, which happens exactly when
// the chord plane misses the cap (no crossing) or the whole cap lies beyond
// it.
struct SegmentParams {
    double theta = 0.0;
    double gamma = 0.0;
    double phi = 0.0;
    double beta = 0.0;
    bool clamped_high = false;
    bool clamped_low = false;
};

// Dispatch bands for the near-degenerate configurations, in radians.
// The defaults keep every band well inside the accuracy of the closed-form
// branch on either side; all three can be overridden.
struct IntersectionConfig {
    double axis_epsilon = 1e-9;        // alpha within this of 0 or pi
    double hemisphere_epsilon = 1e-7;  // |theta - pi/2| within this
    double narrow_epsilon = 1e-5;      // theta at or below this
};

// Solid angle of the cap slice cut off by a plane through the apex whose
// angle to the cap axis is gamma (gamma = +theta grazes the rim with the
// slice vanishing, gamma = -theta leaves the whole cap):
//   omega = 2 (beta - phi cos theta),
//   cos phi = tan(gamma)/tan(theta), cos beta = sin(gamma)/sin(theta),
// with gamma beyond [-theta, theta] saturating to the empty / full cap.
// Requires theta in (0, pi/2).
SolidAngle cap_segment_solid_angle(double theta, double gamma);

SegmentParams cap_segment_params(double theta, double gamma);

// Intermediates and chord-plane angles for a cone pair in general position.
// Requires theta1, theta2 in (0, pi/2) and alpha in (0, pi).
PlaneAngleIntermediates plane_angle_parts(double theta_own, double theta_other, double alpha);
PlaneAngles plane_angles(const ConePair& pair);

// Per-cone segment parameters for the general (crossing-rims) evaluation,
// cone 1 first. The cos ratios are computed directly from the
// PlaneAngleIntermediates rather than through gamma, which keeps them finite
// and exact at the containment/disjoint boundaries where they saturate.
std::array<SegmentParams, 2> pair_segment_params(const ConePair& pair);

// Solid angle of the intersection of the two cones. Handles the whole
// parameter range of ConePair:
//  - a half-aperture above pi/2 is reduced through the complementary cone
//    (applied recursively, so both cones may be reflex);
//  - near-aligned / near-opposite axes, hemispheres, and needle-thin cones
//    are dispatched to stable closed forms inside the config bands;
//  - everything else uses the chord-plane segment sum, whose saturation
//    yields 0 for disjoint cones and min(cap1, cap2) for containment.
// Result is clamped to [0, min(cap1, cap2)].
SolidAngle cones_intersection(const ConePair& pair, const IntersectionConfig& config = {});

}  // namespace solidangle
