#pragma once

#include "sl2r/linalg.hpp"
#include "sl2r/point.hpp"

namespace sl2r {

// 4x4 matrix acting on row vectors of homogeneous coordinates,
// preserving the quadratic form up to a positive factor
struct IsometryMatrix {
    Mat4 m;
};

// translation taking the origin E0 to X; throws std::domain_error unless X is interior
IsometryMatrix translation_to(const ProjectivePoint& x);
IsometryMatrix translation_to_inverse(const ProjectivePoint& x);

// row-vector product, renormalized to x0 > 0 when x0 != 0;
// throws std::runtime_error if the image is the zero vector
ProjectivePoint apply(const IsometryMatrix& t, const ProjectivePoint& p);

// rotation of the fibre coordinate by phi; 2*pi-periodic as a matrix
IsometryMatrix fibre_translate(double phi);

// the isometry shape has two sign branches (two components of the group)
enum class IsometryBranch { None, Upper, Lower };

// validates the row quadratic constraints and the sign pattern after
// normalizing scale; reports which branch matched
IsometryBranch isometry_branch(const Mat4& m, double tol = 1e-9);
bool is_isometry(const Mat4& m, double tol = 1e-9);

}  // namespace sl2r
