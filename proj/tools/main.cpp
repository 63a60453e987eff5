// Copyright solidangle contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: solid angles of spherical polygons, cone
// intersections, and curves, plus a Monte-Carlo cross-check and a small
// benchmark. Angles are radians unless --degrees is given; results are
// steradians printed with 12 fixed decimals. Exit codes: 0 success, 2 usage
// or domain errors, 3 numerical failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"

#include "solidangle/cone_intersection.hpp"
#include "solidangle/curve.hpp"
#include "solidangle/errors.hpp"
#include "solidangle/monte_carlo.hpp"
#include "solidangle/polygon.hpp"
#include "solidangle/sphere_core.hpp"

namespace {

using namespace solidangle;

constexpr double kDegree = kPi / 180.0;

double to_radians(double value, bool degrees) { return degrees ? value * kDegree : value; }

std::vector<UnitVector> read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument(fmt::format("cannot open '{}'", path));
    }
    std::vector<UnitVector> verts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream iss(line);
        double x = 0.0, y = 0.0, z = 0.0;
        std::string extra;
        if (!(iss >> x >> y >> z) || (iss >> extra)) {
            throw std::invalid_argument(
                fmt::format("{}:{}: expected three reals, got '{}'", path, lineno, line));
        }
        try {
            verts.push_back(UnitVector::normalize(Vec3{x, y, z}));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(fmt::format("{}:{}: {}", path, lineno, e.what()));
        }
    }
    if (verts.size() < 3) {
        throw std::invalid_argument(fmt::format(
            "{}: a polygon needs at least 3 vertices, file has {}", path, verts.size()));
    }
    return verts;
}

int cmd_polycone(const std::string& path) {
    const SphericalPolygon poly(read_polygon_file(path));
    fmt::print("{:.12f}\n", polygon_solid_angle(poly).value());
    return 0;
}

int cmd_intersect(double theta1, double theta2, double alpha, bool verbose, bool degrees) {
    const ConePair pair(to_radians(theta1, degrees), to_radians(theta2, degrees),
                        to_radians(alpha, degrees));
    const double omega = cones_intersection(pair).value();
    if (!verbose) {
        fmt::print("{:.12f}\n", omega);
        return 0;
    }
    const double o1 = spherical_cap_solid_angle(pair.theta1).value();
    const double o2 = spherical_cap_solid_angle(pair.theta2).value();
    fmt::print("omega_intersection {:.12f}\n", omega);
    fmt::print("omega_cone1 {:.12f}\n", o1);
    fmt::print("omega_cone2 {:.12f}\n", o2);
    fmt::print("omega_union {:.12f}\n", o1 + o2 - omega);
    return 0;
}

// Piecewise-linear reference between full containment at alpha = |t1 - t2|
// and separation at alpha = t1 + t2, clamped constant outside.
double linear_model(double t1, double t2, double alpha) {
    const double lo = std::abs(t1 - t2);
    const double hi = t1 + t2;
    const double contained = std::min(spherical_cap_solid_angle(t1).value(),
                                      spherical_cap_solid_angle(t2).value());
    if (alpha <= lo) return contained;
    if (alpha >= hi) return 0.0;
    return contained * (hi - alpha) / (hi - lo);
}

int cmd_sweep(double theta1, double theta2, int steps, std::uint64_t mc_samples,
              std::uint64_t seed, unsigned threads, bool degrees) {
    const double t1 = to_radians(theta1, degrees);
    const double t2 = to_radians(theta2, degrees);
    if (steps < 2) {
        throw std::invalid_argument("sweep needs at least 2 steps");
    }
    ConePair(t1, t2, 0.0);  // validate apertures up front

    fmt::print("# generator={} seed={} samples={} threads={}\n", SphereSampler::kGeneratorName,
               seed, mc_samples, threads);
    fmt::print("alpha,omega_exact,omega_linear,omega_mc,mc_stderr\n");
    const UnitVector axis1(0.0, 0.0, 1.0);
    for (int k = 0; k < steps; ++k) {
        const double alpha = kPi * static_cast<double>(k) / static_cast<double>(steps - 1);
        const double exact = cones_intersection(ConePair(t1, t2, alpha)).value();
        const double linear = linear_model(t1, t2, alpha);
        const UnitVector axis2(std::sin(alpha), 0.0, std::cos(alpha));
        const Membership region = Membership::cone_pair(axis1, t1, axis2, t2);
        const MonteCarloEstimate est = estimate_solid_angle(
            region, mc_samples, substream_seed(seed, static_cast<std::uint64_t>(k)), threads);
        fmt::print("{:.12g},{:.12g},{:.12g},{:.12g},{:.12g}\n", alpha, exact, linear, est.omega,
                   est.std_error);
    }
    return 0;
}

std::vector<UnitVector> star_polygon(std::size_t n, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    std::vector<double> azimuth(n);
    for (double& a : azimuth) a = kTwoPi * rng.uniform01();
    std::sort(azimuth.begin(), azimuth.end());
    std::vector<UnitVector> verts;
    verts.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = 0.3 + 0.6 * rng.uniform01();  // polar radius in (0.3, 0.9)
        verts.push_back(UnitVector(std::sin(r) * std::cos(azimuth[j]),
                                   std::sin(r) * std::sin(azimuth[j]), std::cos(r)));
    }
    return verts;
}

int cmd_bench(std::size_t vertices, int reps, std::uint64_t seed) {
    if (vertices < 3 || reps < 1) {
        throw std::invalid_argument("bench needs --vertices >= 3 and --reps >= 1");
    }
    using clock = std::chrono::steady_clock;
    const auto time_call = [reps](auto&& fn) {
        double best = 1e300;
        double value = 0.0;
        for (int r = 0; r < reps; ++r) {
            const auto start = clock::now();
            value = fn();
            const std::chrono::duration<double> dt = clock::now() - start;
            best = std::min(best, dt.count());
        }
        return std::pair<double, double>(best, value);
    };

    const SphericalPolygon poly(star_polygon(vertices, seed));
    const SphericalPolygon poly2(star_polygon(2 * vertices, seed + 1));

    const auto [t_prod, v_prod] = time_call([&] { return polygon_solid_angle(poly).value(); });
    const auto [t_naive, v_naive] =
        time_call([&] { return polygon_solid_angle_naive(poly).value(); });
    const auto [t_prod2, v_prod2] = time_call([&] { return polygon_solid_angle(poly2).value(); });

    fmt::print("vertices={} reps={}\n", vertices, reps);
    fmt::print("product_seconds_per_call={:.6e}\n", t_prod);
    fmt::print("naive_seconds_per_call={:.6e}\n", t_naive);
    fmt::print("abs_difference={:.3e}\n", std::abs(v_prod - v_naive));
    fmt::print("doubling_ratio={:.3f}\n", t_prod2 / t_prod);
    (void)v_prod2;
    return 0;
}

int cmd_curve_circle(double theta, double tol, int max_depth, bool degrees) {
    const double th = to_radians(theta, degrees);
    if (!(th > 0.0 && th < kPi)) {
        throw std::domain_error("circle colatitude must lie in (0, pi)");
    }
    const double st = std::sin(th);
    const double ct = std::cos(th);
    CurveCallbacks circle;
    circle.position = [st, ct](double t) { return Vec3{st * std::cos(t), st * std::sin(t), ct}; };
    circle.first_derivative = [st](double t) {
        return Vec3{-st * std::sin(t), st * std::cos(t), 0.0};
    };
    circle.second_derivative = [st](double t) {
        return Vec3{-st * std::cos(t), -st * std::sin(t), 0.0};
    };
    circle.t_begin = 0.0;
    circle.t_end = kTwoPi;

    QuadratureConfig config;
    config.tolerance = tol;
    config.max_depth = max_depth;
    const double omega = curve_solid_angle(circle, config).value();
    const double closed = spherical_cap_solid_angle(th).value();
    fmt::print("omega {:.12f}\n", omega);
    fmt::print("closed_form {:.12f}\n", closed);
    fmt::print("abs_error {:.3e}\n", std::abs(omega - closed));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solid angles of spherical polygons, cones, and curves"};
    app.require_subcommand(1);

    std::string poly_path;
    CLI::App* polycone = app.add_subcommand(
        "polycone", "Solid angle of the polygonal cone spanned by vertices in FILE");
    polycone->add_option("file", poly_path, "text file, one 3-vector per line, # comments")
        ->required();

    double theta1 = 0.0, theta2 = 0.0, alpha = 0.0;
    bool verbose = false, int_degrees = false;
    CLI::App* intersect =
        app.add_subcommand("intersect", "Solid angle of the intersection of two cones");
    intersect->add_option("--theta1", theta1, "half-aperture of cone 1")->required();
    intersect->add_option("--theta2", theta2, "half-aperture of cone 2")->required();
    intersect->add_option("--alpha", alpha, "angle between the axes")->required();
    intersect->add_flag("--verbose", verbose, "also print the individual caps and the union");
    intersect->add_flag("--degrees", int_degrees, "angles are degrees instead of radians");

    double sw_theta1 = 0.0, sw_theta2 = 0.0;
    int sw_steps = 64;
    std::uint64_t sw_samples = 1000000, sw_seed = 1;
    unsigned sw_threads = 1;
    bool sw_degrees = false;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "CSV sweep of the intersection over axis angles in [0, pi]");
    sweep->add_option("--theta1", sw_theta1, "half-aperture of cone 1")->required();
    sweep->add_option("--theta2", sw_theta2, "half-aperture of cone 2")->required();
    sweep->add_option("--steps", sw_steps, "number of rows (alpha values)");
    sweep->add_option("--mc-samples", sw_samples, "Monte-Carlo samples per row");
    sweep->add_option("--seed", sw_seed, "base seed for all randomness");
    sweep->add_option("--threads", sw_threads, "Monte-Carlo worker threads");
    sweep->add_flag("--degrees", sw_degrees, "angles are degrees instead of radians");

    std::size_t bench_vertices = 100000;
    int bench_reps = 5;
    std::uint64_t bench_seed = 1;
    CLI::App* bench =
        app.add_subcommand("bench", "Time the product and per-corner polygon routes");
    bench->add_option("--vertices", bench_vertices, "polygon size");
    bench->add_option("--reps", bench_reps, "repetitions, best time is reported");
    bench->add_option("--seed", bench_seed, "polygon generator seed");

    double cc_theta = 0.0, cc_tol = 1e-9;
    int cc_depth = 20;
    bool cc_degrees = false;
    CLI::App* curve_circle = app.add_subcommand(
        "curve-circle", "Quadrature of a circle at colatitude theta vs the closed form");
    curve_circle->add_option("--theta", cc_theta, "circle colatitude")->required();
    curve_circle->add_option("--tol", cc_tol, "absolute quadrature tolerance");
    curve_circle->add_option("--max-depth", cc_depth, "adaptive refinement depth limit");
    curve_circle->add_flag("--degrees", cc_degrees, "theta is degrees instead of radians");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(polycone)) return cmd_polycone(poly_path);
        if (app.got_subcommand(intersect))
            return cmd_intersect(theta1, theta2, alpha, verbose, int_degrees);
        if (app.got_subcommand(sweep))
            return cmd_sweep(sw_theta1, sw_theta2, sw_steps, sw_samples, sw_seed, sw_threads,
                             sw_degrees);
        if (app.got_subcommand(bench)) return cmd_bench(bench_vertices, bench_reps, bench_seed);
        if (app.got_subcommand(curve_circle))
            return cmd_curve_circle(cc_theta, cc_tol, cc_depth, cc_degrees);
    } catch (const QuadratureError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 3;
    }
    return 0;
}
