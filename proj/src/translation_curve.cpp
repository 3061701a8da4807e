#include "sl2r/translation_curve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sl2r/errors.hpp"
#include "sl2r/isometry.hpp"

namespace sl2r {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// chart radius of the translation curve at arc length s
double radial_profile(double s, double alpha) {
    const double c2a = std::cos(2.0 * alpha);
    if (std::abs(c2a) < kLightBand) return s;
    if (c2a > 0.0) {
        const double k = std::sqrt(c2a);
        return std::tanh(k * s) / k;
    }
    const double bigk = std::sqrt(-c2a);
    if (bigk * s >= kHalfPi) throw chart_error("translation curve left the x0 > 0 patch");
    return std::tan(bigk * s) / bigk;
}

}  // namespace

ModelPoint translation_curve_point(double s, const Direction& dir) {
    const double rho = radial_profile(s, dir.alpha);
    const double ca = std::cos(dir.alpha);
    return {rho * std::sin(dir.alpha), rho * ca * std::cos(dir.lambda),
            rho * ca * std::sin(dir.lambda)};
}

TranslationArc solve_translation_to(const ModelPoint& target) {
    if (!is_interior(lift(target))) throw std::domain_error("target outside the model");
    const double rho = norm(target.vec());
    if (rho == 0.0) throw std::domain_error("target coincides with the origin");
    const double alpha = std::atan2(target.x, std::hypot(target.y, target.z));
    const double lambda =
        (target.y == 0.0 && target.z == 0.0) ? 0.0 : std::atan2(target.z, target.y);

    const double c2a = std::cos(2.0 * alpha);
    double s;
    if (std::abs(c2a) < kLightBand) {
        s = rho;
    } else if (c2a > 0.0) {
        const double k = std::sqrt(c2a);
        s = std::atanh(rho * k) / k;  // rho * k < 1 whenever the target is interior
    } else {
        const double bigk = std::sqrt(-c2a);
        s = std::atan(rho * bigk) / bigk;
    }
    return {Direction::of(lambda, alpha), s};
}

double translation_distance(const ModelPoint& p, const ModelPoint& q) {
    const IsometryMatrix back = translation_to_inverse(lift(p));
    const ModelPoint image = projective_to_inhomogeneous(apply(back, lift(q)));
    return solve_translation_to(image).s;
}

bool is_straight_chord(const ModelPoint& p, const ModelPoint& q, int samples, double tol) {
    const IsometryMatrix back = translation_to_inverse(lift(p));
    const ModelPoint image = projective_to_inhomogeneous(apply(back, lift(q)));
    const TranslationArc arc = solve_translation_to(image);
    const IsometryMatrix fwd = translation_to(lift(p));
    const Vec3 a = p.vec();
    const Vec3 b = q.vec();
    const Vec3 ab = b - a;
    const double len2 = dot(ab, ab);
    for (int i = 1; i < samples; ++i) {
        const double s = arc.s * i / samples;
        const ModelPoint on =
            projective_to_inhomogeneous(apply(fwd, lift(translation_curve_point(s, arc.dir))));
        const Vec3 d = on.vec() - a;
        const Vec3 off = d - (len2 > 0.0 ? dot(d, ab) / len2 : 0.0) * ab;
        if (norm(off) > tol) return false;
    }
    return true;
}

}  // namespace sl2r
