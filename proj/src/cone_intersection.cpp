// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#include "solidangle/cone_intersection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "solidangle/sphere_core.hpp"

namespace solidangle {

namespace {

constexpr double kHalfPi = 0.5 * kPi;

double cap(double theta) { return kTwoPi * (1.0 - std::cos(theta)); }

double clamp_unit(double x, bool& hi, bool& lo) {
    if (x > 1.0) {
        hi = true;
        return 1.0;
    }
    if (x < -1.0) {
        lo = true;
        return -1.0;
    }
    return x;
}

SegmentParams segment_from_ratios(double theta, double gamma, double cos_phi_raw,
                                  double cos_beta_raw) {
    SegmentParams p;
    p.theta = theta;
    p.gamma = gamma;
    const double cos_phi = clamp_unit(cos_phi_raw, p.clamped_high, p.clamped_low);
    const double cos_beta = clamp_unit(cos_beta_raw, p.clamped_high, p.clamped_low);
    p.phi = std::acos(cos_phi);
    p.beta = std::acos(cos_beta);
    return p;
}

double segment_value(const SegmentParams& p) {
    return 2.0 * (p.beta - std::cos(p.theta) * p.phi);
}

// Thin cone against a plane tilted g away from full coverage: the cap's
// share ramps linearly across the cone width.
double narrow_ramp(double theta_narrow, double g) {
    const double full = cap(theta_narrow);
    if (g > theta_narrow) return 0.0;
    if (g < -theta_narrow) return full;
    return full * (g + theta_narrow) / (2.0 * theta_narrow);
}

double intersect_impl(double t1, double t2, double alpha, const IntersectionConfig& cfg) {
    // Reflex cones reduce through the complement: the overlap with cone 2
    // equals cone 2's cap minus the overlap of the complementary cone at the
    // supplementary axis angle. Applied to either index, recursively.
    if (t1 > kHalfPi) {
        return cap(t2) - intersect_impl(kPi - t1, t2, kPi - alpha, cfg);
    }
    if (t2 > kHalfPi) {
        return cap(t1) - intersect_impl(t1, kPi - t2, kPi - alpha, cfg);
    }

    if (alpha <= cfg.axis_epsilon) {
        return std::min(cap(t1), cap(t2));
    }
    if (alpha >= kPi - cfg.axis_epsilon) {
        return std::max(cap(t1) + cap(t2) - kFourPi, 0.0);
    }

    const bool hemi1 = std::abs(t1 - kHalfPi) <= cfg.hemisphere_epsilon;
    const bool hemi2 = std::abs(t2 - kHalfPi) <= cfg.hemisphere_epsilon;
    if (hemi1 && hemi2) {
        return 2.0 * (kPi - alpha);
    }
    if (hemi1) {
        return cap_segment_solid_angle(t2, alpha - kHalfPi).value();
    }
    if (hemi2) {
        return cap_segment_solid_angle(t1, alpha - kHalfPi).value();
    }

    if (t1 <= cfg.narrow_epsilon) {
        return narrow_ramp(t1, alpha - t2);
    }
    if (t2 <= cfg.narrow_epsilon) {
        return narrow_ramp(t2, alpha - t1);
    }

    const auto params = pair_segment_params(ConePair(t1, t2, alpha));
    return segment_value(params[0]) + segment_value(params[1]);
}

}  // namespace

ConePair::ConePair(double theta1_, double theta2_, double alpha_)
    : theta1(theta1_), theta2(theta2_), alpha(alpha_) {
    if (!(theta1 > 0.0 && theta1 < kPi) || !(theta2 > 0.0 && theta2 < kPi)) {
        throw std::domain_error("cone half-apertures must lie in (0, pi)");
    }
    if (!(alpha >= 0.0 && alpha <= kPi)) {
        throw std::domain_error("axis separation must lie in [0, pi]");
    }
}

SolidAngle cap_segment_solid_angle(double theta, double gamma) {
    return SolidAngle(segment_value(cap_segment_params(theta, gamma)));
}

SegmentParams cap_segment_params(double theta, double gamma) {
    if (!(theta > 0.0 && theta < kHalfPi)) {
        throw std::domain_error("cap segment requires theta in (0, pi/2)");
    }
    if (!std::isfinite(gamma)) {
        throw std::domain_error("plane angle must be finite");
    }
    // Outside the grazing range the plane misses the cap entirely; resolve
    // before the tangent ratio, which is only monotone for |gamma| <= theta.
    if (gamma >= theta) {
        SegmentParams p;
        p.theta = theta;
        p.gamma = gamma;
        p.clamped_high = true;  // phi = beta = 0
        return p;
    }
    if (gamma <= -theta) {
        SegmentParams p;
        p.theta = theta;
        p.gamma = gamma;
        p.phi = kPi;
        p.beta = kPi;
        p.clamped_low = true;
        return p;
    }
    return segment_from_ratios(theta, gamma, std::tan(gamma) / std::tan(theta),
                               std::sin(gamma) / std::sin(theta));
}

PlaneAngleIntermediates plane_angle_parts(double theta_own, double theta_other, double alpha) {
    PlaneAngleIntermediates t;
    t.t_y = std::cos(theta_other) - std::cos(alpha) * std::cos(theta_own);
    t.t_x = std::sin(alpha) * std::cos(theta_own);
    return t;
}

PlaneAngles plane_angles(const ConePair& pair) {
    if (!(pair.theta1 < kHalfPi && pair.theta2 < kHalfPi) ||
        !(pair.alpha > 0.0 && pair.alpha < kPi)) {
        throw std::domain_error(
            "chord-plane angles require theta1, theta2 in (0, pi/2) and alpha in (0, pi)");
    }
    const PlaneAngleIntermediates p1 = plane_angle_parts(pair.theta1, pair.theta2, pair.alpha);
    const PlaneAngleIntermediates p2 = plane_angle_parts(pair.theta2, pair.theta1, pair.alpha);
    PlaneAngles g;
    g.gamma1 = std::atan2(p1.t_y, p1.t_x);
    g.gamma2 = std::atan2(p2.t_y, p2.t_x);
    return g;
}

std::array<SegmentParams, 2> pair_segment_params(const ConePair& pair) {
    if (!(pair.theta1 < kHalfPi && pair.theta2 < kHalfPi) ||
        !(pair.alpha > 0.0 && pair.alpha < kPi)) {
        throw std::domain_error(
            "segment decomposition requires theta1, theta2 in (0, pi/2) and alpha in (0, pi)");
    }
    std::array<SegmentParams, 2> out;
    const double thetas[2] = {pair.theta1, pair.theta2};
    const double others[2] = {pair.theta2, pair.theta1};
    for (int i = 0; i < 2; ++i) {
        const PlaneAngleIntermediates t = plane_angle_parts(thetas[i], others[i], pair.alpha);
        const double gamma = std::atan2(t.t_y, t.t_x);
        const double sin_theta = std::sin(thetas[i]);
        const double cos_theta = std::cos(thetas[i]);
        // cos phi = tan(gamma)/tan(theta) and cos beta = sin(gamma)/sin(theta),
        // expressed through t_x, t_y so the saturation at +-1 falls out of the
        // arithmetic instead of a gamma comparison.
        const double cos_phi_raw = t.t_y * cos_theta / (t.t_x * sin_theta);
        const double cos_beta_raw = t.t_y / (sin_theta * std::hypot(t.t_x, t.t_y));
        out[i] = segment_from_ratios(thetas[i], gamma, cos_phi_raw, cos_beta_raw);
    }
    return out;
}

SolidAngle cones_intersection(const ConePair& pair, const IntersectionConfig& config) {
    if (!(config.axis_epsilon >= 0.0 && config.hemisphere_epsilon >= 0.0 &&
          config.narrow_epsilon >= 0.0)) {
        throw std::domain_error("intersection config bands must be nonnegative");
    }
    const double omega = intersect_impl(pair.theta1, pair.theta2, pair.alpha, config);
    const double lid = std::min(cap(pair.theta1), cap(pair.theta2));
    return SolidAngle(std::clamp(omega, 0.0, lid));
}

}  // namespace solidangle
