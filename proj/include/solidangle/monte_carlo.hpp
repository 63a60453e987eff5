// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>

#include "solidangle/polygon.hpp"
#include "solidangle/unit_vector.hpp"

namespace solidangle {

// xoshiro256++ (Blackman & Vigna), period 2^256 - 1, seeded through
// splitmix64 so any 64-bit seed yields a well-mixed state.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed);

    std::uint64_t next();

    // Uniform double in [0, 1), 53 significant bits.
    double uniform01();

private:
    std::uint64_t s_[4];
};

// Derive an independent substream seed from (seed, index); used for worker
// partitions and per-row streams so that one base seed governs everything
// reproducibly.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// Uniform directions on the sphere: z uniform in [-1, 1], then azimuth
// uniform in [0, 2pi), two draws per direction in that order. A fixed seed
// fixes the stream exactly.
class SphereSampler {
public:
    static constexpr const char* kGeneratorName = "xoshiro256++";

    explicit SphereSampler(std::uint64_t seed);

    UnitVector next();

private:
    Xoshiro256pp rng_;
};

// Deterministic region predicate on the sphere. Boundaries are included;
// they carry no measure, so hit counting is unaffected.
class Membership {
public:
    static Membership cone(const UnitVector& axis, double theta);
    static Membership cone_pair(const UnitVector& axis1, double theta1,
                                const UnitVector& axis2, double theta2);

    // Point-in-polygon by the azimuthal winding of the boundary around the
    // test point (sum of the signed angles each edge subtends): +1 for the
    // region the orientation encloses, 0 outside. Regions so large that they
    // contain a point together with its antipode are not supported (the
    // winding of both points cancels to 0).
    static Membership polygon(SphericalPolygon poly);

    bool contains(const UnitVector& p) const { return pred_(p); }

private:
    explicit Membership(std::function<bool(const UnitVector&)> pred);

    std::function<bool(const UnitVector&)> pred_;
};

struct MonteCarloEstimate {
    double omega = 0.0;      // 4 pi * hit fraction
    double std_error = 0.0;  // 4 pi * sqrt(p (1-p) / samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    const char* generator = SphereSampler::kGeneratorName;
};

// Hit-counting estimate of the region's solid angle. workers > 1 partitions
// the samples across threads, each drawing from substream_seed(seed, w);
// merged counts make the result reproducible for a fixed (seed, workers).
// workers == 1 consumes the plain SphereSampler(seed) stream and is the
// bit-exact single-threaded baseline.
MonteCarloEstimate estimate_solid_angle(const Membership& region,
                                        std::uint64_t samples,
                                        std::uint64_t seed,
                                        unsigned workers = 1);

}  // namespace solidangle
