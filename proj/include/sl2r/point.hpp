#pragma once

#include "sl2r/linalg.hpp"

namespace sl2r {

// exactness tolerance for predicates; callers may override per call
inline constexpr double kEps = 1e-10;

// homogeneous coordinates (x0 : x1 : x2 : x3), positive scale only
struct ProjectivePoint {
    double x0{}, x1{}, x2{}, x3{};

    Vec4 vec() const { return {{x0, x1, x2, x3}}; }
    static ProjectivePoint from(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
    static ProjectivePoint origin() { return {1.0, 0.0, 0.0, 0.0}; }
};

// chart coordinates (x, y, z) = (x1/x0, x2/x0, x3/x0) on the x0 > 0 patch
struct ModelPoint {
    double x{}, y{}, z{};

    Vec3 vec() const { return {x, y, z}; }
    static ModelPoint from(Vec3 v) { return {v.x, v.y, v.z}; }
};

// r >= 0 hyperbolic radius, theta base-plane angle, phi unbounded fibre coordinate
struct HyperboloidCoords {
    double r{}, theta{}, phi{};
};

struct Sl2Matrix {
    double a{}, b{}, c{}, d{};

    double det() const { return a * d - b * c; }
};

// -x0^2 - x1^2 + x2^2 + x3^2; negative inside the model
double quadratic_form(const ProjectivePoint& p);
bool is_interior(const ProjectivePoint& p);

// equality up to positive scale
bool eq_projective(const ProjectivePoint& p, const ProjectivePoint& q, double tol = kEps);

// scale so the first nonzero coordinate has magnitude 1, sign preserved
ProjectivePoint normalized(const ProjectivePoint& p);

ProjectivePoint sl2_to_projective(const Sl2Matrix& m);
// rejects ad - bc <= 0
Sl2Matrix projective_to_sl2(const ProjectivePoint& p);

ProjectivePoint hyperboloid_to_projective(const HyperboloidCoords& h);

// throws chart_error when x0 == 0
ModelPoint projective_to_inhomogeneous(const ProjectivePoint& p);
ProjectivePoint lift(const ModelPoint& m);

// principal branch: phi in (-pi/2, pi/2), r >= 0, theta in (-pi, pi]
// throws std::domain_error for non-interior input
HyperboloidCoords inhomogeneous_to_hyperboloid(const ModelPoint& m);

// wrap into (-pi, pi]
double normalize_angle(double t);

}  // namespace sl2r
