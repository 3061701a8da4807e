#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "sl2r/errors.hpp"
#include "sl2r/geodesic.hpp"
#include "sl2r/point.hpp"
#include "sl2r/translation_curve.hpp"

using namespace sl2r;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("curve points in each steepness regime") {
    // shallow: base-plane profile tanh
    const ModelPoint flat = translation_curve_point(0.7, Direction::of(0.0, 0.0));
    CHECK(flat.x == doctest::Approx(0.0));
    CHECK(flat.y == doctest::Approx(std::tanh(0.7)).epsilon(1e-14));
    CHECK(flat.z == doctest::Approx(0.0));

    // light-like: the chart profile is linear in arc length
    const double c = std::cos(kPi / 4.0);
    const ModelPoint light = translation_curve_point(0.6, Direction::of(0.5, kPi / 4.0));
    CHECK(light.x == doctest::Approx(0.6 * std::sin(kPi / 4.0)).epsilon(1e-14));
    CHECK(light.y == doctest::Approx(0.6 * c * std::cos(0.5)).epsilon(1e-14));
    CHECK(light.z == doctest::Approx(0.6 * c * std::sin(0.5)).epsilon(1e-14));

    // steep: fibre profile tan
    const ModelPoint steep = translation_curve_point(0.4, Direction::of(0.0, kPi / 2.0));
    CHECK(steep.x == doctest::Approx(std::tan(0.4)).epsilon(1e-14));
    CHECK(steep.y == doctest::Approx(0.0));
    CHECK(steep.z == doctest::Approx(0.0));

    CHECK_THROWS_AS(translation_curve_point(1.6, Direction::of(0.0, kPi / 2.0)), chart_error);
}

TEST_CASE("curve distance from the origin") {
    const double rho = translation_distance({0.0, 0.0, 0.0}, {0.3, 0.3, 0.0});
    CHECK(rho == doctest::Approx(0.4242640687119285).epsilon(1e-12));
}

TEST_CASE("two-point solve inverts the curve parametrization") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ua(-1.4, 1.4);
    std::uniform_real_distribution<double> ul(-3.0, 3.0);
    std::uniform_real_distribution<double> us(0.05, 0.9);
    for (int i = 0; i < 40; ++i) {
        const double alpha = ua(rng);
        const double lambda = ul(rng);
        double s = us(rng);
        const double cos2a = std::cos(2.0 * alpha);
        if (cos2a < -1e-12) {
            const double cap = (kPi / 2.0) / std::sqrt(-cos2a);
            s = std::min(s, 0.9 * cap);
        }
        const Direction dir = Direction::of(lambda, alpha);
        const ModelPoint target = translation_curve_point(s, dir);
        const TranslationArc sol = solve_translation_to(target);
        CHECK(sol.s == doctest::Approx(s).epsilon(1e-10));
        const ModelPoint back = translation_curve_point(sol.s, sol.dir);
        CHECK(std::abs(back.x - target.x) < 1e-10);
        CHECK(std::abs(back.y - target.y) < 1e-10);
        CHECK(std::abs(back.z - target.z) < 1e-10);
    }
}

TEST_CASE("initial tangent matches the chart direction of the curve") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ua(-1.4, 1.4);
    std::uniform_real_distribution<double> ul(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const Direction dir = Direction::of(ul(rng), ua(rng));
        const ModelPoint p = translation_curve_point(1e-6, dir);
        const Vec3 chord{p.x / 1e-6, p.y / 1e-6, p.z / 1e-6};
        const Vec3 expect{std::sin(dir.alpha), std::cos(dir.alpha) * std::cos(dir.lambda),
                          std::cos(dir.alpha) * std::sin(dir.lambda)};
        CHECK(std::abs(chord.x - expect.x) < 1e-6);
        CHECK(std::abs(chord.y - expect.y) < 1e-6);
        CHECK(std::abs(chord.z - expect.z) < 1e-6);
    }
}

TEST_CASE("curves trace straight chords in the chart") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-0.45, 0.45);
    for (int i = 0; i < 20; ++i) {
        const ModelPoint p{u(rng), u(rng), u(rng)};
        const ModelPoint q{u(rng), u(rng), u(rng)};
        if (!is_interior(lift(p)) || !is_interior(lift(q)))
            continue;
        const double sep = std::hypot(p.x - q.x, p.y - q.y, p.z - q.z);
        if (sep < 1e-6)
            continue;
        CHECK(is_straight_chord(p, q));
    }
}

TEST_CASE("geodesics are never longer than translation curves") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (int i = 0; i < 10; ++i) {
        const ModelPoint p{u(rng), u(rng), u(rng)};
        const ModelPoint q{u(rng), u(rng), u(rng)};
        const double d = geodesic_distance(p, q);
        const double rho = translation_distance(p, q);
        CHECK(d <= rho + 1e-9);
    }
}

TEST_CASE("solver rejects degenerate or exterior targets") {
    CHECK_THROWS_AS(solve_translation_to({0.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(solve_translation_to({0.0, 1.5, 0.0}), std::domain_error);
}
