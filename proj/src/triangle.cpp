#include "sl2r/triangle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sl2r/errors.hpp"
#include "sl2r/metric.hpp"
#include "sl2r/translation_curve.hpp"

namespace sl2r {

namespace {

constexpr double kPi = std::numbers::pi;

// chart image of p under the inverse of the translation carrying the origin
// to a; algebraic expansion of lift(p) * translation_to(a)^-1
ModelPoint pull_to_frame(const ModelPoint& a, const ModelPoint& p) {
    const double n = -a.x * p.x + a.y * p.y + a.z * p.z - 1.0;
    return {(a.x - p.x - a.y * p.z + p.y * a.z) / n, (-a.x * p.z + p.x * a.z + a.y - p.y) / n,
            (a.x * p.y - p.x * a.y + a.z - p.z) / n};
}

std::array<ModelPoint, 3> charts(const Triangle& t) {
    return {projective_to_inhomogeneous(t.a1), projective_to_inhomogeneous(t.a2),
            projective_to_inhomogeneous(t.a3)};
}

double origin_angle(Vec3 u, Vec3 v) {
    return angle_between({u}, {v}, ModelPoint{});  // the metric is the identity there
}

}  // namespace

TranslatedVertices translated_vertices(const Triangle& t, int vertex_index) {
    if (vertex_index < 1 || vertex_index > 3)
        throw std::domain_error("vertex index must be 1, 2, or 3");
    const auto c = charts(t);
    const ModelPoint& a = c[static_cast<std::size_t>(vertex_index - 1)];
    TranslatedVertices out;
    for (std::size_t j = 0; j < 3; ++j) out.image[j] = pull_to_frame(a, c[j]);
    return out;
}

bool antipodal_check(const ProjectivePoint& p, const ProjectivePoint& q, double tol) {
    const Vec3 cp = projective_to_inhomogeneous(p).vec();
    const Vec3 cq = projective_to_inhomogeneous(q).vec();
    return norm(cp + cq) <= tol;
}

TriangleReport geodesic_triangle_report(const Triangle& t) {
    TriangleReport rep;
    rep.kind = TriangleKind::Geodesic;
    rep.classification = classify(t);
    double omega[3] = {};
    for (int i = 0; i < 3; ++i) {
        const TranslatedVertices tv = translated_vertices(t, i + 1);
        const auto j = static_cast<std::size_t>((i + 1) % 3);
        const auto k = static_cast<std::size_t>((i + 2) % 3);
        GeodesicArc aj, ak;
        try {
            aj = solve_geodesic_to(tv.image[j]);
            ak = solve_geodesic_to(tv.image[k]);
        } catch (const solver_error& e) {
            throw solver_error("vertex " + std::to_string(i + 1) + ": " + e.what(), e.residual);
        }
        omega[i] = origin_angle(geodesic_tangent_at_origin(aj.dir),
                                geodesic_tangent_at_origin(ak.dir));
        if (i == 0) {
            rep.side_lengths[2] = aj.s;  // d(A1,A2)
            rep.side_lengths[1] = ak.s;  // d(A1,A3)
        } else if (i == 2) {
            rep.side_lengths[0] = ak.s;  // d(A2,A3)
            rep.alpha23 = std::abs(ak.dir.alpha);
        }
    }
    rep.omega1 = omega[0];
    rep.omega2 = omega[1];
    rep.omega3 = omega[2];
    rep.angle_sum = omega[0] + omega[1] + omega[2];
    return rep;
}

TriangleReport translation_triangle_report(const Triangle& t) {
    plane_normal(t);  // throws degenerate_error on collinear vertices
    TriangleReport rep;
    rep.kind = TriangleKind::Translation;
    rep.classification = classify(t);
    double omega[3] = {};
    for (int i = 0; i < 3; ++i) {
        const TranslatedVertices tv = translated_vertices(t, i + 1);
        const auto j = static_cast<std::size_t>((i + 1) % 3);
        const auto k = static_cast<std::size_t>((i + 2) % 3);
        // the tangent toward a translated neighbour is its own chart vector
        omega[i] = origin_angle(tv.image[j].vec(), tv.image[k].vec());
        const TranslationArc aj = solve_translation_to(tv.image[j]);
        const TranslationArc ak = solve_translation_to(tv.image[k]);
        if (i == 0) {
            rep.side_lengths[2] = aj.s;
            rep.side_lengths[1] = ak.s;
        } else if (i == 2) {
            rep.side_lengths[0] = ak.s;
            rep.alpha23 = std::abs(ak.dir.alpha);
        }
    }
    rep.omega1 = omega[0];
    rep.omega2 = omega[1];
    rep.omega3 = omega[2];
    rep.angle_sum = omega[0] + omega[1] + omega[2];
    return rep;
}

PlaneNormal plane_normal(const Triangle& t) {
    const auto c = charts(t);
    const Vec3 b2 = pull_to_frame(c[0], c[1]).vec();
    const Vec3 b3 = pull_to_frame(c[0], c[2]).vec();
    const Vec3 v = cross(b2, b3);
    if (norm(v) <= 1e-14 * norm(b2) * norm(b3))
        throw degenerate_error("collinear vertices span no plane");
    return {v};
}

bool is_lightlike(const PlaneNormal& n, double tol) {
    const Vec3& v = n.v;
    return std::abs(-v.x * v.x + v.y * v.y + v.z * v.z) <= tol * dot(v, v);
}

std::array<double, 3> spherical_projection_arcs(const Triangle& t) {
    const auto c = charts(t);
    const ModelPoint b2 = pull_to_frame(c[0], c[1]);
    const ModelPoint b3 = pull_to_frame(c[0], c[2]);
    // consecutive chain: A3 and A1 seen from A2, then A1 and A2 seen from A3
    const std::array<Vec3, 4> chain = {pull_to_frame(b2, b3).vec(), -b2.vec(), -b3.vec(),
                                       pull_to_frame(b3, b2).vec()};
    std::array<double, 3> arcs{};
    for (std::size_t k = 0; k < 3; ++k) {
        const Vec3 u = chain[k];
        const Vec3 v = chain[k + 1];
        if (norm(u) == 0.0 || norm(v) == 0.0) throw degenerate_error("coincident vertices");
        arcs[k] = std::atan2(norm(cross(u, v)), dot(u, v));
    }
    return arcs;
}

PiSearchResult find_pi_sum_triangle(const ProjectivePoint& a2, const ProjectivePoint& a3_start,
                                    const ProjectivePoint& a3_end, double tol,
                                    int max_iterations) {
    const Vec3 c0 = projective_to_inhomogeneous(a3_start).vec();
    const Vec3 c1 = projective_to_inhomogeneous(a3_end).vec();
    auto triangle_at = [&](double t) {
        const ModelPoint m = ModelPoint::from(c0 + t * (c1 - c0));
        if (!is_interior(lift(m))) throw std::domain_error("segment leaves the model interior");
        return Triangle{ProjectivePoint::origin(), a2, lift(m)};
    };
    auto excess_at = [&](double t) {
        return geodesic_triangle_report(triangle_at(t)).angle_sum - kPi;
    };

    const double f0 = excess_at(0.0);
    const double f1 = excess_at(1.0);
    if (!(f0 < 0.0 && f1 > 0.0) && !(f0 > 0.0 && f1 < 0.0))
        throw std::domain_error("endpoint angle sums do not straddle pi");

    double lo = 0.0;
    double hi = 1.0;
    double flo = f0;
    double fcur = f0;
    for (int it = 0; it < max_iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        const Triangle tri = triangle_at(mid);
        const TriangleReport rep = geodesic_triangle_report(tri);
        fcur = rep.angle_sum - kPi;
        if (std::abs(fcur) <= tol) return {mid, tri, rep};
        if (flo * fcur <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fcur;
        }
    }
    throw solver_error("pi angle sum bisection exhausted its budget", std::abs(fcur));
}

TriangleClass classify(const Triangle& t, double eps) {
    const auto c = charts(t);
    const ModelPoint b2 = pull_to_frame(c[0], c[1]);
    const ModelPoint b3 = pull_to_frame(c[0], c[2]);
    auto on_axis = [eps](const ModelPoint& m) {
        return std::abs(m.y) <= eps && std::abs(m.z) <= eps;
    };
    // an edge lies on a fibre line iff one endpoint, seen from the other,
    // sits on the fibre axis
    if (on_axis(b2) || on_axis(b3) || on_axis(pull_to_frame(b2, b3)))
        return TriangleClass::FibreLike;
    if (std::abs(b2.x) <= eps && std::abs(b3.x) <= eps) return TriangleClass::HyperbolicLike;
    return TriangleClass::General;
}

}  // namespace sl2r
