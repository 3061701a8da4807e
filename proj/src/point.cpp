#include "sl2r/point.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sl2r/errors.hpp"

namespace sl2r {

namespace {
constexpr double kPi = std::numbers::pi;
}

double quadratic_form(const ProjectivePoint& p) {
    return -p.x0 * p.x0 - p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3;
}

bool is_interior(const ProjectivePoint& p) { return quadratic_form(p) < 0.0; }

ProjectivePoint normalized(const ProjectivePoint& p) {
    const double c[4] = {p.x0, p.x1, p.x2, p.x3};
    for (double v : c) {
        if (v != 0.0) {
            const double s = 1.0 / std::abs(v);
            return {s * p.x0, s * p.x1, s * p.x2, s * p.x3};
        }
    }
    throw std::domain_error("projective point has all coordinates zero");
}

bool eq_projective(const ProjectivePoint& p, const ProjectivePoint& q, double tol) {
    const ProjectivePoint a = normalized(p);
    const ProjectivePoint b = normalized(q);
    return std::abs(a.x0 - b.x0) <= tol && std::abs(a.x1 - b.x1) <= tol &&
           std::abs(a.x2 - b.x2) <= tol && std::abs(a.x3 - b.x3) <= tol;
}

ProjectivePoint sl2_to_projective(const Sl2Matrix& m) {
    return {(m.a + m.d) / 2.0, (m.b - m.c) / 2.0, (m.b + m.c) / 2.0, (m.a - m.d) / 2.0};
}

Sl2Matrix projective_to_sl2(const ProjectivePoint& p) {
    const Sl2Matrix m{p.x0 + p.x3, p.x1 + p.x2, -p.x1 + p.x2, p.x0 - p.x3};
    if (!(m.det() > 0.0)) throw std::domain_error("point corresponds to ad - bc <= 0");
    return m;
}

ProjectivePoint hyperboloid_to_projective(const HyperboloidCoords& h) {
    return {std::cosh(h.r) * std::cos(h.phi), std::cosh(h.r) * std::sin(h.phi),
            std::sinh(h.r) * std::cos(h.theta - h.phi), std::sinh(h.r) * std::sin(h.theta - h.phi)};
}

ModelPoint projective_to_inhomogeneous(const ProjectivePoint& p) {
    if (p.x0 == 0.0) throw chart_error("x0 = 0 has no chart coordinates");
    return {p.x1 / p.x0, p.x2 / p.x0, p.x3 / p.x0};
}

ProjectivePoint lift(const ModelPoint& m) { return {1.0, m.x, m.y, m.z}; }

double normalize_angle(double t) {
    t = std::fmod(t + kPi, 2.0 * kPi);
    if (t <= 0.0) t += 2.0 * kPi;
    return t - kPi;
}

HyperboloidCoords inhomogeneous_to_hyperboloid(const ModelPoint& m) {
    if (!is_interior(lift(m))) throw std::domain_error("point is not interior");
    const double phi = std::atan(m.x);
    const double rho = std::hypot(m.y, m.z);
    const double tr = std::cos(phi) * rho;
    const double r = std::atanh(tr);
    const double theta = rho > 0.0 ? normalize_angle(phi + std::atan2(m.z, m.y)) : 0.0;
    return {r, theta, phi};
}

}  // namespace sl2r
