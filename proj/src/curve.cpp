// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#include "solidangle/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "solidangle/polygon.hpp"
#include "solidangle/sphere_core.hpp"

namespace solidangle {

namespace {

constexpr double kCornerTangentOffset = 1e-7;  // fraction of the domain length
constexpr double kCornerNudge = 1e-12;         // fraction, keeps quadrature off corner params
constexpr double kOriginRel = 1e-12;           // |L| below this fraction of the start radius

struct Integrand {
    const CurveCallbacks& curve;
    double origin_floor_sq;

    double operator()(double t) const {
        const Vec3 L = curve.position(t);
        const double r2 = squared_norm(L);
        if (!(r2 > origin_floor_sq)) {
            throw std::invalid_argument("curve passes through the origin");
        }
        const double rinv = 1.0 / std::sqrt(r2);
        const Vec3 s = rinv * L;
        const Vec3 Lp = curve.first_derivative(t);
        const Vec3 L1 = Lp - dot(s, Lp) * s;
        const double l1sq = squared_norm(L1);
        if (!(l1sq > 1e-24 * squared_norm(Lp))) {
            throw std::invalid_argument(
                "stationary point: projected velocity vanishes on the sphere");
        }
        const Vec3 Lpp = curve.second_derivative(t);
        const Vec3 L2 = Lpp - dot(s, Lpp) * s;
        return norm(cross(L1, L2)) / l1sq;
    }
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic adaptive Simpson with Richardson extrapolation of the accepted
// pieces. tol is the absolute budget for [a, b].
double adapt(const Integrand& f, double a, double fa, double m, double fm, double b, double fb,
             double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol) {
        return left + right + err / 15.0;
    }
    if (depth <= 0) {
        throw QuadratureError("adaptive quadrature exhausted its refinement depth");
    }
    return adapt(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

double integrate_segment(const Integrand& f, double a, double b, double tol, int max_depth) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    return adapt(f, a, fa, m, fm, b, fb, simpson(fa, fm, fb, b - a), tol, max_depth);
}

void validate(const CurveCallbacks& c) {
    if (!c.position || !c.first_derivative || !c.second_derivative) {
        throw std::invalid_argument("curve callbacks must all be set");
    }
    if (!(c.t_end > c.t_begin)) {
        throw std::invalid_argument("curve domain is empty");
    }
    double last = c.t_begin - 1.0;
    for (double t : c.corner_params) {
        if (!(t >= c.t_begin && t <= c.t_end)) {
            throw std::invalid_argument("corner parameter outside the curve domain");
        }
        if (!(t > last)) {
            throw std::invalid_argument("corner parameters must be strictly increasing");
        }
        last = t;
    }
    const Vec3 p0 = c.position(c.t_begin);
    const Vec3 p1 = c.position(c.t_end);
    const double scale = std::max(1.0, norm(p0));
    if (norm(p0 - p1) > 1e-9 * scale) {
        throw std::invalid_argument("curve is not closed: position(t_begin) != position(t_end)");
    }
}

}  // namespace

double curvature_integrand(const CurveCallbacks& curve, double t) {
    if (!curve.position || !curve.first_derivative || !curve.second_derivative) {
        throw std::invalid_argument("curve callbacks must all be set");
    }
    const double r0 = norm(curve.position(curve.t_begin));
    Integrand f{curve, kOriginRel * kOriginRel * r0 * r0};
    return f(t);
}

SolidAngle curve_solid_angle(const CurveCallbacks& curve, const QuadratureConfig& config) {
    validate(curve);
    if (!(config.tolerance > 0.0) || config.max_depth < 1) {
        throw std::invalid_argument("quadrature config requires tolerance > 0 and max_depth >= 1");
    }

    const double len = curve.t_end - curve.t_begin;

    // Corners at both seam ends are one corner; keep the t_begin copy.
    std::vector<double> corners = curve.corner_params;
    if (!corners.empty() && corners.front() == curve.t_begin && corners.back() == curve.t_end) {
        corners.pop_back();
    }

    // Turn angles at corners, one-sided tangents sampled just off the corner
    // and projected at the corner point (exact for great-circle edges).
    const double eps = kCornerTangentOffset * len;
    double turn_sum = 0.0;
    for (double tc : corners) {
        double tm = tc - eps;
        if (tm < curve.t_begin) tm += len;
        double tp = tc + eps;
        if (tp > curve.t_end) tp -= len;
        const UnitVector point = UnitVector::normalize(curve.position(tc));
        turn_sum += tangent_turn_angle(point, curve.first_derivative(tm),
                                       curve.first_derivative(tp));
    }

    // Smooth segments between consecutive corners; without any corner the
    // seam is smooth and the whole domain is one segment.
    std::vector<double> bounds;
    bounds.push_back(curve.t_begin);
    for (double tc : corners) {
        if (tc > bounds.back()) bounds.push_back(tc);
    }
    if (curve.t_end > bounds.back()) bounds.push_back(curve.t_end);

    const std::size_t nseg = bounds.size() - 1;
    const double seg_tol = config.tolerance / static_cast<double>(nseg);
    const double nudge = kCornerNudge * len;
    const double r0 = norm(curve.position(curve.t_begin));
    const Integrand f{curve, kOriginRel * kOriginRel * r0 * r0};

    auto is_corner = [&](double t) {
        return std::binary_search(corners.begin(), corners.end(), t);
    };

    const bool seam_corner =
        !corners.empty() &&
        (corners.front() == curve.t_begin || corners.back() == curve.t_end);
    double integral = 0.0;
    for (std::size_t i = 0; i < nseg; ++i) {
        // derivatives are one-sided at corners; keep the evaluation points
        // strictly inside the smooth piece
        double a = bounds[i];
        double b = bounds[i + 1];
        if (is_corner(a) || (a == curve.t_begin && seam_corner)) a += nudge;
        if (is_corner(b) || (b == curve.t_end && seam_corner)) b -= nudge;
        integral += integrate_segment(f, a, b, seg_tol, config.max_depth);
    }

    return SolidAngle(fold_solid_angle(kTwoPi - turn_sum - integral));
}

SolidAngle sampled_curve_solid_angle(const SampledCurve& curve) {
    if (!curve.corner_flags.empty() && curve.corner_flags.size() != curve.samples.size()) {
        throw std::invalid_argument("corner_flags must be empty or match samples in length");
    }
    if (curve.samples.size() < 3) {
        throw std::invalid_argument("sampled curve needs at least 3 samples");
    }
    return polygon_solid_angle(SphericalPolygon(curve.samples));
}

}  // namespace solidangle
