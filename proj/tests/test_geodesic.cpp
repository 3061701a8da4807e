#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "sl2r/errors.hpp"
#include "sl2r/geodesic.hpp"
#include "sl2r/point.hpp"

using namespace sl2r;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("regime thresholds") {
    CHECK(regime_of(0.2) == Regime::H2Like);
    CHECK(regime_of(kPi / 4.0) == Regime::LightLike);
    CHECK(regime_of(1.0) == Regime::FibreLike);
    CHECK(regime_of(kPi / 4.0 + 1e-9) == Regime::FibreLike);
    CHECK(regime_of(kPi / 4.0 - 1e-9) == Regime::H2Like);
    CHECK(regime_of(-0.2) == Regime::H2Like);
}

TEST_CASE("base-plane curve stays radial") {
    const PolarState st = geodesic_polar(0.8, 0.0);
    CHECK(st.r == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(st.theta == doctest::Approx(0.0));
    CHECK(st.phi == doctest::Approx(0.0));
}

TEST_CASE("light-like closed form") {
    const double s = 2.0;
    const PolarState st = geodesic_polar(s, kPi / 4.0);
    CHECK(st.r == doctest::Approx(std::asinh(s / std::sqrt(2.0))).epsilon(1e-14));
    CHECK(st.theta == doctest::Approx(-std::atan(s / std::sqrt(2.0))).epsilon(1e-14));
    CHECK(st.phi == doctest::Approx(std::sqrt(2.0) * s + st.theta).epsilon(1e-14));
}

TEST_CASE("vertical curve climbs the fibre") {
    const PolarState st = geodesic_polar(0.3, kPi / 2.0);
    CHECK(st.r == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(st.theta == doctest::Approx(-0.3).epsilon(1e-12));
    CHECK(st.phi == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("closed form is continuous across the light-like band") {
    for (double s : {0.3, 1.0, 2.0}) {
        const PolarState lo = geodesic_polar(s, kPi / 4.0 - 1e-9);
        const PolarState mid = geodesic_polar(s, kPi / 4.0);
        const PolarState hi = geodesic_polar(s, kPi / 4.0 + 1e-9);
        CHECK(lo.r == doctest::Approx(mid.r).epsilon(1e-6));
        CHECK(hi.r == doctest::Approx(mid.r).epsilon(1e-6));
        CHECK(lo.theta == doctest::Approx(mid.theta).epsilon(1e-6));
        CHECK(hi.theta == doctest::Approx(mid.theta).epsilon(1e-6));
        CHECK(lo.phi == doctest::Approx(mid.phi).epsilon(1e-6));
        CHECK(hi.phi == doctest::Approx(mid.phi).epsilon(1e-6));
    }
}

TEST_CASE("negative altitude mirrors the curve") {
    for (double alpha : {0.3, 1.1}) {
        const PolarState pos = geodesic_polar(0.9, alpha);
        const PolarState neg = geodesic_polar(0.9, -alpha);
        CHECK(neg.r == doctest::Approx(pos.r).epsilon(1e-14));
        CHECK(neg.theta == doctest::Approx(-pos.theta).epsilon(1e-14));
        CHECK(neg.phi == doctest::Approx(-pos.phi).epsilon(1e-14));
    }
}

TEST_CASE("chart points on axis-aligned curves") {
    const ModelPoint o = geodesic_point(0.0, Direction::of(0.0, 0.0));
    CHECK(o.x == doctest::Approx(0.0));
    CHECK(o.y == doctest::Approx(0.0));
    CHECK(o.z == doctest::Approx(0.0));

    const ModelPoint base = geodesic_point(std::atanh(0.5), Direction::of(0.0, 0.0));
    CHECK(base.x == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(base.y == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(base.z == doctest::Approx(0.0).epsilon(1e-14));

    const ModelPoint fib = geodesic_point(std::atan(0.2), Direction::of(0.0, kPi / 2.0));
    CHECK(fib.x == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(fib.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fib.z == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(geodesic_point(1.6, Direction::of(0.0, kPi / 2.0)), chart_error);
}

TEST_CASE("initial tangent has unit chart length") {
    const Vec3 t0 = geodesic_tangent_at_origin(Direction::of(0.0, 0.0));
    CHECK(t0.x == doctest::Approx(0.0));
    CHECK(t0.y == doctest::Approx(1.0));
    CHECK(t0.z == doctest::Approx(0.0));

    const Vec3 t1 = geodesic_tangent_at_origin(Direction::of(1.2, 0.4));
    CHECK(norm(t1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t1.x == doctest::Approx(std::sin(0.4)).epsilon(1e-14));
}

TEST_CASE("numeric integration agrees with the closed forms") {
    const double alphas[] = {0.0, 0.2, kPi / 4.0, 1.0, 3.0 * kPi / 8.0, kPi / 2.0 - 0.01};
    for (double alpha : alphas) {
        const auto path = integrate_geodesic(Direction::of(0.0, alpha), 2.0, 1e-3);
        double worst = 0.0;
        for (const auto& sample : path) {
            if (sample.s < 0.05)
                continue;
            const PolarState exact = geodesic_polar(sample.s, alpha);
            worst = std::max(worst, std::abs(sample.state.r - exact.r));
            worst = std::max(worst, std::abs(sample.state.theta - exact.theta));
            worst = std::max(worst, std::abs(sample.state.phi - exact.phi));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("two-point solve on the coordinate axes") {
    const GeodesicArc base = solve_geodesic_to({0.0, 0.5, 0.0});
    CHECK(base.s == doctest::Approx(std::atanh(0.5)).epsilon(1e-12));
    CHECK(base.dir.alpha == doctest::Approx(0.0));
    CHECK(base.dir.lambda == doctest::Approx(0.0));

    const GeodesicArc fib = solve_geodesic_to({0.2, 0.0, 0.0});
    CHECK(fib.s == doctest::Approx(std::atan(0.2)).epsilon(1e-12));
    CHECK(std::abs(fib.dir.alpha) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("two-point solve inverts the exponential map") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(-1.2, 1.2);
    std::uniform_real_distribution<double> ul(-3.0, 3.0);
    std::uniform_real_distribution<double> us(0.05, 0.8);
    for (int i = 0; i < 25; ++i) {
        const double alpha = ua(rng);
        const double lambda = ul(rng);
        const double s = us(rng);
        const ModelPoint target = geodesic_point(s, Direction::of(lambda, alpha));
        const GeodesicArc sol = solve_geodesic_to(target);
        const ModelPoint back = geodesic_point(sol.s, sol.dir);
        CHECK(std::abs(back.x - target.x) < 1e-8);
        CHECK(std::abs(back.y - target.y) < 1e-8);
        CHECK(std::abs(back.z - target.z) < 1e-8);
        CHECK(sol.s <= s + 1e-8);
    }
}

TEST_CASE("two-point solve residuals stay within the contract") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int i = 0; i < 50; ++i) {
        const ModelPoint target{u(rng), u(rng), u(rng)};
        if (!is_interior(lift(target)))
            continue;
        if (std::abs(target.x) < 1e-12 && std::hypot(target.y, target.z) < 1e-12)
            continue;
        const GeodesicArc sol = solve_geodesic_to(target);
        CHECK(sol.residual <= 1e-9);
    }
}

TEST_CASE("distances from the origin") {
    const double d = geodesic_distance({0.0, 0.0, 0.0}, {0.0, 0.5, 0.0});
    CHECK(d == doctest::Approx(0.5493061443340548).epsilon(1e-12));

    const double dfib = geodesic_distance({0.0, 0.0, 0.0}, {0.2, 0.0, 0.0});
    CHECK(dfib == doctest::Approx(std::atan(0.2)).epsilon(1e-12));
}

TEST_CASE("distance between two off-origin points") {
    const double d = geodesic_distance({0.0, 0.5, 0.0}, {0.2, 0.0, 0.0});
    CHECK(d == doctest::Approx(0.5809368072776757).epsilon(1e-9));
}

TEST_CASE("distance is symmetric") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (int i = 0; i < 10; ++i) {
        const ModelPoint p{u(rng), u(rng), u(rng)};
        const ModelPoint q{u(rng), u(rng), u(rng)};
        const double dpq = geodesic_distance(p, q);
        const double dqp = geodesic_distance(q, p);
        CHECK(dpq == doctest::Approx(dqp).epsilon(1e-8));
    }
}

TEST_CASE("solver rejects degenerate or exterior targets") {
    CHECK_THROWS_AS(solve_geodesic_to({0.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(solve_geodesic_to({0.0, 1.5, 0.0}), std::domain_error);
}
