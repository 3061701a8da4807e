#pragma once

#include <array>

#include "sl2r/geodesic.hpp"
#include "sl2r/isometry.hpp"
#include "sl2r/point.hpp"

namespace sl2r {

// vertices must be interior and pairwise distinct as projective points
struct Triangle {
    ProjectivePoint a1, a2, a3;
};

enum class TriangleKind { Geodesic, Translation };
enum class TriangleClass { FibreLike, HyperbolicLike, General };

struct TriangleReport {
    double omega1{}, omega2{}, omega3{};  // interior angles at A1, A2, A3
    double angle_sum{};
    // side_lengths[k] is the side opposite vertex k+1: {d(A2,A3), d(A1,A3), d(A1,A2)}
    std::array<double, 3> side_lengths{};
    TriangleKind kind = TriangleKind::Geodesic;
    TriangleClass classification = TriangleClass::General;
    // altitude of the solved arc from vertex A3's frame to the image of A2;
    // mirrors the |alpha| column of the angle-sum tables
    double alpha23{};
};

// chart images of (A1, A2, A3) under the inverse translation taking A_i to the
// origin, in closed form; agrees with the matrix product route
struct TranslatedVertices {
    std::array<ModelPoint, 3> image;
};
TranslatedVertices translated_vertices(const Triangle& t, int vertex_index);

// chart coordinate vectors are negatives of each other
bool antipodal_check(const ProjectivePoint& p, const ProjectivePoint& q, double tol = 1e-10);

// per vertex: translate it to the origin, solve the two connecting geodesics,
// measure the Euclidean angle between their tangents (the metric is the
// identity at the origin)
TriangleReport geodesic_triangle_report(const Triangle& t);

// same frame, but the tangent toward a translated neighbour is the neighbour's
// own chart vector; throws degenerate_error for collinear vertices
TriangleReport translation_triangle_report(const Triangle& t);

// Euclidean normal of the plane spanned by the images of A2 and A3 after
// moving A1 to the origin
struct PlaneNormal {
    Vec3 v;
};
PlaneNormal plane_normal(const Triangle& t);

// -v1^2 + v2^2 + v3^2 = 0 within tol scaled by |v|^2; such planes are exactly
// the translation-invariant ones
bool is_lightlike(const PlaneNormal& n, double tol = 1e-9);

// central projection of the translated vertices onto the unit sphere; the
// three consecutive arc lengths sum to the translation angle sum and the two
// end projections are antipodal
std::array<double, 3> spherical_projection_arcs(const Triangle& t);

struct PiSearchResult {
    double t{};           // parameter on the segment from a3_start to a3_end
    Triangle triangle;    // the located triangle
    TriangleReport report;
};

// bisection over the chart segment a3_start .. a3_end for a geodesic triangle
// with angle sum pi; requires the endpoint sums to straddle pi
// (throws std::domain_error otherwise, solver_error if the budget runs out)
PiSearchResult find_pi_sum_triangle(const ProjectivePoint& a2, const ProjectivePoint& a3_start,
                                    const ProjectivePoint& a3_end, double tol = 1e-10,
                                    int max_iterations = 200);

// FibreLike: some edge lies on the fibre axis through the origin;
// HyperbolicLike: all vertices in the base plane; General otherwise
TriangleClass classify(const Triangle& t, double eps = kEps);

}  // namespace sl2r
