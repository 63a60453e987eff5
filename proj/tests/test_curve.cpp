// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "solidangle/curve.hpp"
#include "solidangle/errors.hpp"
#include "solidangle/polygon.hpp"
#include "solidangle/sphere_core.hpp"
#include "test_helpers.hpp"

using namespace solidangle;

namespace {

// Planar circle of colatitude theta about +z, parameter = azimuth, optionally
// scaled away from the unit sphere.
CurveCallbacks circle_curve(double theta, double radius = 1.0) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    CurveCallbacks c;
    c.position = [=](double t) {
        return Vec3{radius * st * std::cos(t), radius * st * std::sin(t), radius * ct};
    };
    c.first_derivative = [=](double t) {
        return Vec3{-radius * st * std::sin(t), radius * st * std::cos(t), 0.0};
    };
    c.second_derivative = [=](double t) {
        return Vec3{-radius * st * std::cos(t), -radius * st * std::sin(t), 0.0};
    };
    c.t_begin = 0.0;
    c.t_end = kTwoPi;
    return c;
}

// Closed chain of great-circle arcs through the given vertices, one unit of
// parameter per edge, corner at every integer.
CurveCallbacks arc_chain(std::vector<UnitVector> verts) {
    const std::size_t n = verts.size();
    std::vector<Vec3> v(n);
    std::vector<double> ang(n), sinang(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = verts[i].vec();
    for (std::size_t i = 0; i < n; ++i) {
        const double c = std::min(1.0, std::max(-1.0, dot(v[i], v[(i + 1) % n])));
        ang[i] = std::acos(c);
        sinang[i] = std::sin(ang[i]);
    }
    auto edge = [n](double t) {
        auto e = static_cast<std::size_t>(t);
        if (e >= n) e = n - 1;
        return e;
    };
    CurveCallbacks c;
    c.position = [=](double t) {
        const std::size_t e = edge(t);
        const double u = t - static_cast<double>(e);
        const double A = ang[e];
        return (std::sin((1.0 - u) * A) / sinang[e]) * v[e] +
               (std::sin(u * A) / sinang[e]) * v[(e + 1) % n];
    };
    c.first_derivative = [=](double t) {
        const std::size_t e = edge(t);
        const double u = t - static_cast<double>(e);
        const double A = ang[e];
        return (-A * std::cos((1.0 - u) * A) / sinang[e]) * v[e] +
               (A * std::cos(u * A) / sinang[e]) * v[(e + 1) % n];
    };
    c.second_derivative = [=](double t) {
        const std::size_t e = edge(t);
        const double u = t - static_cast<double>(e);
        const double A = ang[e];
        return (-A * A * std::sin((1.0 - u) * A) / sinang[e]) * v[e] +
               (-A * A * std::sin(u * A) / sinang[e]) * v[(e + 1) % n];
    };
    c.t_begin = 0.0;
    c.t_end = static_cast<double>(n);
    return c;
}

std::vector<UnitVector> cube_face_verts() {
    const double s = 1.0 / std::sqrt(3.0);
    return {UnitVector(s, s, s), UnitVector(-s, s, s), UnitVector(-s, -s, s),
            UnitVector(s, -s, s)};
}

// Planar ellipse floating above the origin; smooth, non-constant curvature
// integrand, no closed form.
CurveCallbacks ellipse_curve() {
    CurveCallbacks c;
    c.position = [](double t) { return Vec3{2.0 * std::cos(t), std::sin(t), 1.2}; };
    c.first_derivative = [](double t) { return Vec3{-2.0 * std::sin(t), std::cos(t), 0.0}; };
    c.second_derivative = [](double t) { return Vec3{-2.0 * std::cos(t), -std::sin(t), 0.0}; };
    c.t_begin = 0.0;
    c.t_end = kTwoPi;
    return c;
}

}  // namespace

TEST_CASE("smooth circle matches the cap closed form") {
    for (double theta : {0.3, 0.9, 1.4}) {
        const double w = curve_solid_angle(circle_curve(theta)).value();
        const double cap = spherical_cap_solid_angle(theta).value();
        CHECK(std::abs(w - cap) <= 1e-9);
    }
}

TEST_CASE("result is scale invariant") {
    const double cap = spherical_cap_solid_angle(0.7).value();
    CHECK(std::abs(curve_solid_angle(circle_curve(0.7, 7.3)).value() - cap) <= 1e-9);
    CHECK(std::abs(curve_solid_angle(circle_curve(0.7, 0.02)).value() - cap) <= 1e-9);
}

TEST_CASE("result is reparameterization invariant") {
    // t = pi (u^2 + u), u in [0, 1]: strictly monotone, non-uniform speed.
    const CurveCallbacks base = circle_curve(1.1);
    CurveCallbacks repa;
    repa.position = [&](double u) { return base.position(kPi * (u * u + u)); };
    repa.first_derivative = [&](double u) {
        const double dphi = kPi * (2.0 * u + 1.0);
        return dphi * base.first_derivative(kPi * (u * u + u));
    };
    repa.second_derivative = [&](double u) {
        const double phi = kPi * (u * u + u);
        const double dphi = kPi * (2.0 * u + 1.0);
        return (dphi * dphi) * base.second_derivative(phi) + kTwoPi * base.first_derivative(phi);
    };
    repa.t_begin = 0.0;
    repa.t_end = 1.0;
    const double cap = spherical_cap_solid_angle(1.1).value();
    CHECK(std::abs(curve_solid_angle(repa).value() - cap) <= 1e-9);
}

TEST_CASE("arc chains reproduce exact polygon values") {
    SUBCASE("octant, corner on the seam start") {
        CurveCallbacks c = arc_chain({UnitVector(1, 0, 0), UnitVector(0, 1, 0), UnitVector(0, 0, 1)});
        c.corner_params = {0.0, 1.0, 2.0};
        CHECK(std::abs(curve_solid_angle(c).value() - kPi / 2) <= 1e-9);
    }
    SUBCASE("cube face") {
        CurveCallbacks c = arc_chain(cube_face_verts());
        c.corner_params = {0.0, 1.0, 2.0, 3.0};
        CHECK(std::abs(curve_solid_angle(c).value() - 2.0 * kPi / 3.0) <= 1e-9);
    }
    SUBCASE("seam corner declared at t_end instead of t_begin") {
        CurveCallbacks c = arc_chain(cube_face_verts());
        c.corner_params = {1.0, 2.0, 3.0, 4.0};
        CHECK(std::abs(curve_solid_angle(c).value() - 2.0 * kPi / 3.0) <= 1e-9);
    }
    SUBCASE("seam corner listed at both ends collapses to one corner") {
        CurveCallbacks c = arc_chain(cube_face_verts());
        c.corner_params = {0.0, 1.0, 2.0, 3.0, 4.0};
        CHECK(std::abs(curve_solid_angle(c).value() - 2.0 * kPi / 3.0) <= 1e-9);
    }
    SUBCASE("great-circle edges have zero curvature integrand") {
        const CurveCallbacks c = arc_chain(cube_face_verts());
        for (double t : {0.25, 0.5, 1.75, 3.4}) {
            CHECK(curvature_integrand(c, t) < 1e-10);
        }
    }
}

TEST_CASE("ellipse agrees with a dense geodesic polyline") {
    const CurveCallbacks c = ellipse_curve();
    const double w = curve_solid_angle(c).value();
    SampledCurve sampled;
    const std::size_t n = 8192;
    sampled.samples.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        sampled.samples.push_back(
            UnitVector::normalize(c.position(kTwoPi * static_cast<double>(k) / static_cast<double>(n))));
    }
    CHECK(std::abs(w - sampled_curve_solid_angle(sampled).value()) <= 1e-6);
}

TEST_CASE("quadrature failure surfaces as QuadratureError") {
    CHECK_THROWS_AS(curve_solid_angle(ellipse_curve(), QuadratureConfig{1e-9, 2}), QuadratureError);
}

TEST_CASE("quadrature config is validated") {
    CHECK_THROWS_AS(curve_solid_angle(circle_curve(0.5), QuadratureConfig{0.0, 20}),
                    std::invalid_argument);
    CHECK_THROWS_AS(curve_solid_angle(circle_curve(0.5), QuadratureConfig{-1e-9, 20}),
                    std::invalid_argument);
    CHECK_THROWS_AS(curve_solid_angle(circle_curve(0.5), QuadratureConfig{1e-9, 0}),
                    std::invalid_argument);
}

TEST_CASE("curve validation") {
    SUBCASE("missing callbacks") {
        CurveCallbacks c;
        CHECK_THROWS_AS(curve_solid_angle(c), std::invalid_argument);
        CHECK_THROWS_AS(curvature_integrand(c, 0.0), std::invalid_argument);
    }
    SUBCASE("empty domain") {
        CurveCallbacks c = circle_curve(0.5);
        c.t_end = c.t_begin;
        CHECK_THROWS_AS(curve_solid_angle(c), std::invalid_argument);
    }
    SUBCASE("corner parameters out of range or unsorted") {
        CurveCallbacks c = circle_curve(0.5);
        c.corner_params = {-1.0};
        CHECK_THROWS_AS(curve_solid_angle(c), std::invalid_argument);
        c.corner_params = {2.0, 1.0};
        CHECK_THROWS_AS(curve_solid_angle(c), std::invalid_argument);
        c.corner_params = {1.0, 1.0};
        CHECK_THROWS_AS(curve_solid_angle(c), std::invalid_argument);
    }
    SUBCASE("open curve") {
        CurveCallbacks c = circle_curve(0.5);
        c.t_end = kPi;  // half a turn
        CHECK_THROWS_AS(curve_solid_angle(c), std::invalid_argument);
    }
}

TEST_CASE("curve through the origin is rejected") {
    CurveCallbacks c;
    c.position = [](double t) { return Vec3{1.0 + std::cos(t), std::sin(t), 0.0}; };
    c.first_derivative = [](double t) { return Vec3{-std::sin(t), std::cos(t), 0.0}; };
    c.second_derivative = [](double t) { return Vec3{-std::cos(t), -std::sin(t), 0.0}; };
    c.t_begin = 0.0;
    c.t_end = kTwoPi;
    CHECK_THROWS_AS(curvature_integrand(c, kPi), std::invalid_argument);
    CHECK_THROWS_AS(curve_solid_angle(c), std::invalid_argument);
}

TEST_CASE("stationary projected velocity is rejected") {
    // Monotone reparameterization t = u + sin u stalls at u = pi.
    const CurveCallbacks base = circle_curve(1.0);
    CurveCallbacks c;
    c.position = [&](double u) { return base.position(u + std::sin(u)); };
    c.first_derivative = [&](double u) {
        return (1.0 + std::cos(u)) * base.first_derivative(u + std::sin(u));
    };
    c.second_derivative = [&](double u) {
        const double d = 1.0 + std::cos(u);
        return (d * d) * base.second_derivative(u + std::sin(u)) -
               std::sin(u) * base.first_derivative(u + std::sin(u));
    };
    c.t_begin = 0.0;
    c.t_end = kTwoPi;
    CHECK_THROWS_AS(curvature_integrand(c, kPi), std::invalid_argument);
    CHECK_THROWS_AS(curve_solid_angle(c), std::invalid_argument);
}

TEST_CASE("sampled curves") {
    SUBCASE("three exact samples give the octant") {
        SampledCurve s;
        s.samples = {UnitVector(1, 0, 0), UnitVector(0, 1, 0), UnitVector(0, 0, 1)};
        CHECK(sampled_curve_solid_angle(s).value() == doctest::Approx(kPi / 2).epsilon(1e-15));
    }
    SUBCASE("corner flags are bookkeeping only") {
        SampledCurve s;
        s.samples = {UnitVector(1, 0, 0), UnitVector(0, 1, 0), UnitVector(0, 0, 1)};
        s.corner_flags = {true, true, true};
        CHECK(sampled_curve_solid_angle(s).value() == doctest::Approx(kPi / 2).epsilon(1e-15));
        s.corner_flags = {false, false, false};
        CHECK(sampled_curve_solid_angle(s).value() == doctest::Approx(kPi / 2).epsilon(1e-15));
    }
    SUBCASE("validation") {
        SampledCurve s;
        s.samples = {UnitVector(1, 0, 0), UnitVector(0, 1, 0)};
        CHECK_THROWS_AS(sampled_curve_solid_angle(s), std::invalid_argument);
        s.samples = {UnitVector(1, 0, 0), UnitVector(0, 1, 0), UnitVector(0, 0, 1)};
        s.corner_flags = {true, false};
        CHECK_THROWS_AS(sampled_curve_solid_angle(s), std::invalid_argument);
    }
    SUBCASE("dense sampling approaches the smooth value") {
        const double theta = 0.8;
        SampledCurve s;
        s.samples = testing::circle_polygon(theta, 512);
        const double cap = spherical_cap_solid_angle(theta).value();
        CHECK(std::abs(sampled_curve_solid_angle(s).value() - cap) < 1e-4);
    }
}
