// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#include "solidangle/polygon.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace solidangle {

namespace {

double chord(const Vec3& u, const Vec3& v) { return norm(u - v); }

}  // namespace

SphericalPolygon::SphericalPolygon(std::vector<UnitVector> vertices) {
    verts_.reserve(vertices.size());
    for (const UnitVector& v : vertices) {
        if (verts_.empty() || chord(verts_.back().vec(), v.vec()) >= kMergeChord) {
            verts_.push_back(v);
        }
    }
    // the closing edge may also have collapsed
    while (verts_.size() > 1 && chord(verts_.front().vec(), verts_.back().vec()) < kMergeChord) {
        verts_.pop_back();
    }
    if (verts_.size() < 3) {
        throw std::invalid_argument(
            "spherical polygon needs at least 3 distinct vertices after merging duplicates");
    }
    for (std::size_t j = 0; j < verts_.size(); ++j) {
        const Vec3& u = verts_[j].vec();
        const Vec3& v = verts_[(j + 1) % verts_.size()].vec();
        if (norm(u + v) < kMergeChord) {
            throw std::invalid_argument(
                "consecutive antipodal vertices: connecting great circle is ambiguous");
        }
    }
}

void WindingProduct::multiply(double re, double im) {
    const double re0 = re_;
    const double im0 = im_;
    double re1 = re0 * re - im0 * im;
    double im1 = re0 * im + im0 * re;
    const double mag = std::sqrt(re1 * re1 + im1 * im1);
    if (!(mag > 0.0)) {
        throw std::invalid_argument("zero factor would lose the accumulated argument");
    }
    re1 /= mag;
    im1 /= mag;

    // The factor's argument shares the sign of its imaginary part (negative
    // real factors count as +pi), and one factor advances the argument by at
    // most pi, so the branch cut at +-pi can only be passed in that
    // direction. Detect the pass from the side switch of the running
    // product, honouring the half-open principal range: landing exactly on
    // the cut arrives at +pi (no pass from above; a pass from below).
    const bool forward = im > 0.0 || (im == 0.0 && re < 0.0);
    if (forward) {
        const bool from_upper = im0 > 0.0 || (im0 == 0.0 && re0 < 0.0);
        const bool to_lower = im1 < 0.0 || (im1 == 0.0 && re1 > 0.0);
        if (from_upper && to_lower) ++winding_;
    } else if (im < 0.0) {
        const bool from_lower = im0 < 0.0;
        const bool to_upper = im1 > 0.0 || (im1 == 0.0 && re1 < 0.0);
        if (from_lower && to_upper) --winding_;
    }

    re_ = re1;
    im_ = im1;
}

double WindingProduct::accumulated_argument() const {
    return std::atan2(im_, re_) + kTwoPi * static_cast<double>(winding_);
}

SolidAngle polygon_solid_angle(const SphericalPolygon& poly) {
    const std::vector<UnitVector>& v = poly.vertices();
    const std::size_t n = v.size();

    // b[j] = v[j-1].v[j]; the next corner's b is this corner's c, so each
    // edge dot product is computed once.
    std::vector<double> b(n);
    b[0] = dot(v[n - 1].vec(), v[0].vec());
    for (std::size_t j = 1; j < n; ++j) {
        b[j] = dot(v[j - 1].vec(), v[j].vec());
    }

    WindingProduct prod;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t jp = (j == 0) ? n - 1 : j - 1;
        const std::size_t jn = (j + 1 == n) ? 0 : j + 1;
        const Vec3& prev = v[jp].vec();
        const Vec3& curr = v[j].vec();
        const Vec3& next = v[jn].vec();
        const double a = dot(prev, next);
        const double d = triple(prev, curr, next);
        prod.multiply(b[j] * b[jn] - a, d);
    }
    return SolidAngle(fold_solid_angle(kTwoPi - prod.accumulated_argument()));
}

SolidAngle polygon_solid_angle_naive(const SphericalPolygon& poly) {
    const std::vector<UnitVector>& v = poly.vertices();
    const std::size_t n = v.size();
    double turn_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t jp = (j == 0) ? n - 1 : j - 1;
        const std::size_t jn = (j + 1 == n) ? 0 : j + 1;
        const Vec3& prev = v[jp].vec();
        const Vec3& curr = v[j].vec();
        const Vec3& next = v[jn].vec();
        const double a = dot(prev, next);
        const double b = dot(prev, curr);
        const double c = dot(curr, next);
        const double d = triple(prev, curr, next);
        turn_sum += std::atan2(d, b * c - a);
    }
    return SolidAngle(fold_solid_angle(kTwoPi - turn_sum));
}

SolidAngle triangle_solid_angle(const UnitVector& v1, const UnitVector& v2, const UnitVector& v3) {
    const double a = dot(v1.vec(), v3.vec());
    const double b = dot(v1.vec(), v2.vec());
    const double c = dot(v2.vec(), v3.vec());
    const double d = triple(v1.vec(), v2.vec(), v3.vec());
    const double denom = 1.0 + a + b + c;
    if (d == 0.0 && denom <= 0.0) {
        throw std::invalid_argument(
            "degenerate triangle: antipodal configuration with ambiguous hemisphere");
    }
    return SolidAngle(fold_solid_angle(2.0 * std::atan2(d, denom)));
}

}  // namespace solidangle
