#pragma once

#include "sl2r/linalg.hpp"
#include "sl2r/point.hpp"

namespace sl2r {

enum class ChartTag { Polar, Inhomogeneous };

struct TangentVector {
    Vec3 v;
    ChartTag chart = ChartTag::Inhomogeneous;
};

struct MetricTensor {
    Mat3 g;

    // leading principal minors all positive
    bool positive_definite() const;
};

// metric in (r, theta, phi); degenerate at r = 0 (polar chart singularity)
MetricTensor metric_polar(double r);

// metric in chart coordinates (x, y, z) with denominator D = -1 - x^2 + y^2 + z^2;
// the (2,3) entry is -y*z/D^2, fixed by pulling the polar tensor through the
// chart change (a pull-back consistency test pins the sign)
MetricTensor metric_inhomogeneous(const ModelPoint& m);

// |quadratic_form(lift(m))| < eps, i.e. the metric is nearly singular there
bool near_boundary(const ModelPoint& m, double eps = kEps);

// angle in [0, pi] via the metric at the base point; both vectors must carry
// the Inhomogeneous tag; throws std::domain_error on zero-norm input
double angle_between(const TangentVector& u, const TangentVector& v, const ModelPoint& at);

// polar-chart variant, metric taken at radius r
double angle_between_polar(const TangentVector& u, const TangentVector& v, double r);

}  // namespace sl2r
