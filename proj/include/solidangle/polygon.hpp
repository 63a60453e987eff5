// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "solidangle/solid_angle.hpp"
#include "solidangle/sphere_core.hpp"
#include "solidangle/unit_vector.hpp"

namespace solidangle {

// Closed oriented polygon on the unit sphere, edges along great circles.
//
// Counterclockwise traversal, seen from outside the sphere, encloses the
// region whose solid angle the polygon operations report; the reversed
// traversal yields the complement, and the two results sum to 4 pi.
//
// Construction cleans the vertex list: consecutive vertices closer than
// kMergeChord (chord distance, closing edge included) are merged, and
// consecutive antipodal vertices are rejected because the connecting great
// circle would be ambiguous. At least 3 vertices must survive.
class SphericalPolygon {
public:
    static constexpr double kMergeChord = 1e-12;

    explicit SphericalPolygon(std::vector<UnitVector> vertices);

    const std::vector<UnitVector>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

private:
    std::vector<UnitVector> verts_;
};

// Unit-magnitude running complex product that keeps an explicit count of
// branch-cut crossings, so the accumulated argument of the factors is
// recovered exactly instead of modulo 2 pi. The product is renormalized on
// every step; re^2 + im^2 stays within 1e-12 of 1.
//
// Convention: the argument of each factor lies in (-pi, pi], a negative real
// factor counting as +pi. The winding count increments when the running
// argument passes +pi heading counterclockwise and decrements when it passes
// -pi heading clockwise, exactly mirroring what atan2 loses.
class WindingProduct {
public:
    // Multiply by the factor re + i*im (any magnitude > 0).
    void multiply(double re, double im);

    double re() const { return re_; }
    double im() const { return im_; }
    int winding() const { return winding_; }

    // atan2(im, re) + 2 pi * winding: the exact sum of factor arguments.
    double accumulated_argument() const;

private:
    double re_ = 1.0;
    double im_ = 0.0;
    int winding_ = 0;
};

// Solid angle enclosed by the polygon, via a single final arctangent over
// the winding-tracked product of per-corner factors (bc - a) + i d.
// O(n): 3n scalar products, n cross products, one atan2.
SolidAngle polygon_solid_angle(const SphericalPolygon& poly);

// Same quantity via one arctangent per corner. Slower reference route kept
// for equivalence checking and benchmarking against the product form.
SolidAngle polygon_solid_angle_naive(const SphericalPolygon& poly);

// Spherical triangle special case, one arctangent total:
//   omega = 2 atan2(d, 1 + a + b + c)
// folded into [0, 4pi). Classic tan(omega/2) formula (Van Oosterom &
// Strackee, IEEE Trans. Biomed. Eng. 30, 1983). Throws std::invalid_argument
// in the antipodal-ambiguous case d = 0, 1 + a + b + c <= 0.
SolidAngle triangle_solid_angle(const UnitVector& v1, const UnitVector& v2, const UnitVector& v3);

}  // namespace solidangle
