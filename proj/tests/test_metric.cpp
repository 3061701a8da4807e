#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "sl2r/errors.hpp"
#include "sl2r/geodesic.hpp"
#include "sl2r/metric.hpp"
#include "sl2r/point.hpp"

using namespace sl2r;

namespace {

constexpr double kPi = std::numbers::pi;

// chart map (r, theta, phi) -> (x, y, z), used to pull the chart metric back
// onto the polar coordinates by finite differences
ModelPoint chart_map(double r, double theta, double phi) {
    const double x = std::tan(phi);
    const double rho = std::tanh(r) / std::cos(phi);
    return {x, rho * std::cos(theta - phi), rho * std::sin(theta - phi)};
}

double quad(const Mat3& g, const Vec3& u, const Vec3& v) { return bilinear(g, u, v); }

}  // namespace

TEST_CASE("polar metric components") {
    const MetricTensor g0 = metric_polar(0.0);
    CHECK(g0.g(0, 0) == doctest::Approx(1.0));
    CHECK(g0.g(1, 1) == doctest::Approx(0.0));
    CHECK(g0.g(2, 2) == doctest::Approx(1.0));
    CHECK(g0.g(1, 2) == doctest::Approx(0.0));

    const MetricTensor g1 = metric_polar(1.0);
    CHECK(g1.g(1, 1) == doctest::Approx(5.195960363462305).epsilon(1e-12));
    const double sh = std::sinh(1.0);
    CHECK(g1.g(1, 2) == doctest::Approx(sh * sh).epsilon(1e-12));
    CHECK(g1.g(2, 1) == doctest::Approx(sh * sh).epsilon(1e-12));
    CHECK(g1.g(2, 2) == doctest::Approx(1.0));
    CHECK(g1.positive_definite());
}

TEST_CASE("chart metric at the origin is euclidean") {
    const MetricTensor g = metric_inhomogeneous({0.0, 0.0, 0.0});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(g.g(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("chart metric along the fibre axis") {
    const double x = 0.3;
    const MetricTensor g = metric_inhomogeneous({x, 0.0, 0.0});
    const double d = 1.0 + x * x;
    CHECK(g.g(0, 0) == doctest::Approx(1.0 / (d * d)).epsilon(1e-14));
    CHECK(g.g(0, 1) == doctest::Approx(0.0));
    CHECK(g.g(1, 2) == doctest::Approx(0.0));
    CHECK(g.positive_definite());
}

TEST_CASE("chart metric is positive definite on the interior") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ux(-2.0, 2.0);
    std::uniform_real_distribution<double> uyz(-0.7, 0.7);
    for (int i = 0; i < 1000; ++i) {
        const ModelPoint m{ux(rng), uyz(rng), uyz(rng)};
        if (!is_interior(lift(m)))
            continue;
        const MetricTensor g = metric_inhomogeneous(m);
        CHECK(g.positive_definite());
        CHECK(g.g(0, 1) == doctest::Approx(g.g(1, 0)).epsilon(1e-14));
        CHECK(g.g(0, 2) == doctest::Approx(g.g(2, 0)).epsilon(1e-14));
        CHECK(g.g(1, 2) == doctest::Approx(g.g(2, 1)).epsilon(1e-14));
    }
}

TEST_CASE("chart metric pulls back to the polar metric") {
    // finite-difference jacobian of the chart map, evaluated at phi = 0
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> ur(0.2, 1.4);
    std::uniform_real_distribution<double> ut(-2.5, 2.5);
    const double h = 1e-6;
    for (int trial = 0; trial < 5; ++trial) {
        const double r = ur(rng);
        const double theta = ut(rng);
        const double phi = 0.0;

        Vec3 cols[3];
        const double vals[3] = {r, theta, phi};
        for (int j = 0; j < 3; ++j) {
            double plus[3] = {vals[0], vals[1], vals[2]};
            double minus[3] = {vals[0], vals[1], vals[2]};
            plus[j] += h;
            minus[j] -= h;
            const ModelPoint mp = chart_map(plus[0], plus[1], plus[2]);
            const ModelPoint mm = chart_map(minus[0], minus[1], minus[2]);
            cols[j] = {(mp.x - mm.x) / (2.0 * h), (mp.y - mm.y) / (2.0 * h),
                       (mp.z - mm.z) / (2.0 * h)};
        }

        const MetricTensor gc = metric_inhomogeneous(chart_map(r, theta, phi));
        const MetricTensor gp = metric_polar(r);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(quad(gc.g, cols[i], cols[j]) ==
                      doctest::Approx(gp.g(i, j)).epsilon(1e-5).scale(1.0));
    }
}

TEST_CASE("unit-speed curves have chart speed one") {
    const double h = 1e-6;
    const double alphas[] = {0.2, kPi / 4.0, 1.0, 3.0 * kPi / 8.0};
    const double svals[] = {0.3, 0.7, 1.2};
    for (double alpha : alphas) {
        for (double s : svals) {
            const PolarState a = geodesic_polar(s - h, alpha);
            const PolarState b = geodesic_polar(s + h, alpha);
            const Vec3 vel{(b.r - a.r) / (2.0 * h), (b.theta - a.theta) / (2.0 * h),
                           (b.phi - a.phi) / (2.0 * h)};
            const PolarState mid = geodesic_polar(s, alpha);
            const double speed2 = quad(metric_polar(mid.r).g, vel, vel);
            CHECK(std::sqrt(speed2) == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("angles between chart tangent vectors") {
    const ModelPoint origin{0.0, 0.0, 0.0};
    const TangentVector ex{{1.0, 0.0, 0.0}};
    const TangentVector ey{{0.0, 1.0, 0.0}};
    CHECK(angle_between(ex, ex, origin) == doctest::Approx(0.0));
    CHECK(angle_between(ex, ey, origin) == doctest::Approx(kPi / 2.0).epsilon(1e-14));

    const TangentVector scaled{{7.0, 0.0, 0.0}};
    const ModelPoint m{0.2, 0.1, -0.3};
    CHECK(angle_between(scaled, ey, m) == doctest::Approx(angle_between(ex, ey, m)).epsilon(1e-12));

    CHECK_THROWS_AS(angle_between({{0.0, 0.0, 0.0}}, ey, origin), std::domain_error);

    const TangentVector polar_tagged{{1.0, 0.0, 0.0}, ChartTag::Polar};
    CHECK_THROWS_AS(angle_between(polar_tagged, ey, origin), std::domain_error);

    CHECK(angle_between_polar({{1.0, 0.0, 0.0}, ChartTag::Polar},
                              {{0.0, 0.0, 1.0}, ChartTag::Polar},
                              0.5) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("boundary proximity check") {
    CHECK(near_boundary({0.0, 1.0 - 5e-12, 0.0}));
    CHECK_FALSE(near_boundary({0.0, 0.5, 0.0}));
}
