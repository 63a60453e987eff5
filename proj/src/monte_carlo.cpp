// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0

#include "solidangle/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "solidangle/solid_angle.hpp"

namespace solidangle {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// splitmix64 output function (Steele, Lea & Flood constants)
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    s_[0] = splitmix64(sm);
    s_[1] = splitmix64(sm);
    s_[2] = splitmix64(sm);
    s_[3] = splitmix64(sm);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
        s_[0] = 1;  // the all-zero state is the one fixed point
    }
}

std::uint64_t Xoshiro256pp::next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256pp::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    return splitmix64(state);
}

SphereSampler::SphereSampler(std::uint64_t seed) : rng_(seed) {}

UnitVector SphereSampler::next() {
    const double z = 2.0 * rng_.uniform01() - 1.0;
    const double phi = kTwoPi * rng_.uniform01();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return UnitVector(r * std::cos(phi), r * std::sin(phi), z);
}

Membership::Membership(std::function<bool(const UnitVector&)> pred) : pred_(std::move(pred)) {}

Membership Membership::cone(const UnitVector& axis, double theta) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw std::domain_error("cone half-aperture must lie in [0, pi]");
    }
    const Vec3 a = axis.vec();
    const double c = std::cos(theta);
    return Membership([a, c](const UnitVector& p) { return dot(p.vec(), a) >= c; });
}

Membership Membership::cone_pair(const UnitVector& axis1, double theta1,
                                 const UnitVector& axis2, double theta2) {
    if (!(theta1 >= 0.0 && theta1 <= kPi) || !(theta2 >= 0.0 && theta2 <= kPi)) {
        throw std::domain_error("cone half-apertures must lie in [0, pi]");
    }
    const Vec3 a1 = axis1.vec();
    const Vec3 a2 = axis2.vec();
    const double c1 = std::cos(theta1);
    const double c2 = std::cos(theta2);
    return Membership([a1, c1, a2, c2](const UnitVector& p) {
        return dot(p.vec(), a1) >= c1 && dot(p.vec(), a2) >= c2;
    });
}

Membership Membership::polygon(SphericalPolygon poly) {
    std::vector<Vec3> verts;
    verts.reserve(poly.size());
    for (const UnitVector& v : poly.vertices()) verts.push_back(v.vec());
    return Membership([verts = std::move(verts)](const UnitVector& point) {
        const Vec3& p = point.vec();
        // Azimuthal winding of the boundary around p: project each vertex
        // into the tangent plane at p and accumulate the signed angle
        // between consecutive projections. Inside sums to +2 pi.
        double total = 0.0;
        const std::size_t n = verts.size();
        Vec3 w_prev = verts[n - 1] - dot(p, verts[n - 1]) * p;
        for (std::size_t j = 0; j < n; ++j) {
            const Vec3 w = verts[j] - dot(p, verts[j]) * p;
            total += std::atan2(triple(p, w_prev, w), dot(w_prev, w));
            w_prev = w;
        }
        return total > kPi;
    });
}

MonteCarloEstimate estimate_solid_angle(const Membership& region, std::uint64_t samples,
                                        std::uint64_t seed, unsigned workers) {
    if (samples == 0) {
        throw std::invalid_argument("sample count must be positive");
    }
    if (workers == 0) workers = 1;

    std::uint64_t hits = 0;
    if (workers == 1) {
        SphereSampler sampler(seed);
        for (std::uint64_t i = 0; i < samples; ++i) {
            if (region.contains(sampler.next())) ++hits;
        }
    } else {
        std::vector<std::uint64_t> counts(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t base = samples / workers;
        const std::uint64_t rem = samples % workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t quota = base + (w < rem ? 1 : 0);
            pool.emplace_back([&region, &counts, seed, w, quota] {
                SphereSampler sampler(substream_seed(seed, w));
                std::uint64_t local = 0;
                for (std::uint64_t i = 0; i < quota; ++i) {
                    if (region.contains(sampler.next())) ++local;
                }
                counts[w] = local;
            });
        }
        for (std::thread& t : pool) t.join();
        for (std::uint64_t c : counts) hits += c;
    }

    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    MonteCarloEstimate est;
    est.omega = kFourPi * p;
    est.std_error = kFourPi * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    est.workers = workers;
    return est;
}

}  // namespace solidangle
