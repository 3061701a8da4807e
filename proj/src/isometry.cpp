#include "sl2r/isometry.hpp"

#include <cmath>
#include <stdexcept>

#include "sl2r/errors.hpp"

namespace sl2r {

namespace {

ProjectivePoint oriented(const ProjectivePoint& x) {
    // keep x0 >= 0 so the matrix rows carry the chart orientation
    if (x.x0 < 0.0) return {-x.x0, -x.x1, -x.x2, -x.x3};
    return x;
}

}  // namespace

IsometryMatrix translation_to(const ProjectivePoint& x) {
    if (!is_interior(x)) throw std::domain_error("translation target is not interior");
    const ProjectivePoint p = oriented(x);
    IsometryMatrix t;
    t.m.m = {{{p.x0, p.x1, p.x2, p.x3},
              {-p.x1, p.x0, p.x3, -p.x2},
              {p.x2, p.x3, p.x0, p.x1},
              {p.x3, -p.x2, -p.x1, p.x0}}};
    return t;
}

IsometryMatrix translation_to_inverse(const ProjectivePoint& x) {
    if (!is_interior(x)) throw std::domain_error("translation target is not interior");
    const ProjectivePoint p = oriented(x);
    IsometryMatrix t;
    t.m.m = {{{p.x0, -p.x1, -p.x2, -p.x3},
              {p.x1, p.x0, -p.x3, p.x2},
              {-p.x2, -p.x3, p.x0, -p.x1},
              {-p.x3, p.x2, p.x1, p.x0}}};
    return t;
}

ProjectivePoint apply(const IsometryMatrix& t, const ProjectivePoint& p) {
    Vec4 q = p.vec() * t.m;
    double mag = 0.0;
    for (int i = 0; i < 4; ++i) mag = std::max(mag, std::abs(q[i]));
    if (mag == 0.0) throw std::runtime_error("isometry maps the point to zero");
    if (q[0] < 0.0) q = -q;
    return ProjectivePoint::from(q);
}

IsometryMatrix fibre_translate(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    IsometryMatrix t;
    t.m.m = {{{c, s, 0.0, 0.0}, {-s, c, 0.0, 0.0}, {0.0, 0.0, c, -s}, {0.0, 0.0, s, c}}};
    return t;
}

namespace {

// Minkowski row form with signature (- - + +)
double mink(const Vec4& u, const Vec4& v) {
    return -u[0] * v[0] - u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

bool rows_match(const Mat4& a, int row, const Vec4& want, double tol) {
    for (int j = 0; j < 4; ++j)
        if (std::abs(a(row, j) - want[j]) > tol) return false;
    return true;
}

}  // namespace

IsometryBranch isometry_branch(const Mat4& m, double tol) {
    const Vec4 r0 = m.row(0);
    const double c2 = -mink(r0, r0);
    if (!(c2 > 0.0)) return IsometryBranch::None;
    const double inv = 1.0 / std::sqrt(c2);

    Mat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = m(i, j) * inv;

    const Vec4 s0 = a.row(0);
    const Vec4 s2 = a.row(2);
    if (std::abs(mink(s0, s0) + 1.0) > tol) return IsometryBranch::None;
    if (std::abs(mink(s2, s2) - 1.0) > tol) return IsometryBranch::None;
    if (std::abs(mink(s0, s2)) > tol) return IsometryBranch::None;
    const double twist = -s0[0] * s2[1] + s0[1] * s2[0] - s0[2] * s2[3] + s0[3] * s2[2];
    if (std::abs(twist) > tol) return IsometryBranch::None;

    const Vec4 up1{{-s0[1], s0[0], s0[3], -s0[2]}};
    const Vec4 up3{{s2[1], -s2[0], -s2[3], s2[2]}};
    if (rows_match(a, 1, up1, tol) && rows_match(a, 3, up3, tol)) return IsometryBranch::Upper;

    const Vec4 lo1 = -up1;
    const Vec4 lo3 = -up3;
    if (rows_match(a, 1, lo1, tol) && rows_match(a, 3, lo3, tol)) return IsometryBranch::Lower;

    return IsometryBranch::None;
}

bool is_isometry(const Mat4& m, double tol) { return isometry_branch(m, tol) != IsometryBranch::None; }

}  // namespace sl2r
