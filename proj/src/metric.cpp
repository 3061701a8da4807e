#include "sl2r/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace sl2r {

bool MetricTensor::positive_definite() const {
    const double m1 = g(0, 0);
    const double m2 = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    const double m3 = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) -
                      g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
                      g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
    return m1 > 0.0 && m2 > 0.0 && m3 > 0.0;
}

MetricTensor metric_polar(double r) {
    const double sh2 = std::sinh(r) * std::sinh(r);
    const double ch2 = std::cosh(r) * std::cosh(r);
    MetricTensor t;
    t.g(0, 0) = 1.0;
    t.g(1, 1) = sh2 * (sh2 + ch2);
    t.g(1, 2) = t.g(2, 1) = sh2;
    t.g(2, 2) = 1.0;
    return t;
}

MetricTensor metric_inhomogeneous(const ModelPoint& m) {
    const double x = m.x, y = m.y, z = m.z;
    const double d = -1.0 - x * x + y * y + z * z;
    const double d2 = d * d;
    MetricTensor t;
    t.g(0, 0) = (1.0 + y * y + z * z) / d2;
    t.g(0, 1) = t.g(1, 0) = (-x * y - 2.0 * z) / d2;
    t.g(0, 2) = t.g(2, 0) = (-x * z + 2.0 * y) / d2;
    t.g(1, 1) = (1.0 + x * x + z * z) / d2;
    t.g(1, 2) = t.g(2, 1) = (-y * z) / d2;
    t.g(2, 2) = (1.0 + x * x + y * y) / d2;
    return t;
}

bool near_boundary(const ModelPoint& m, double eps) {
    return std::abs(quadratic_form(lift(m))) < eps;
}

namespace {

double angle_from(const Mat3& g, Vec3 u, Vec3 v) {
    const double uu = bilinear(g, u, u);
    const double vv = bilinear(g, v, v);
    if (!(uu > 0.0) || !(vv > 0.0)) throw std::domain_error("zero-norm tangent vector");
    double c = bilinear(g, u, v) / std::sqrt(uu * vv);
    c = std::max(-1.0, std::min(1.0, c));
    return std::acos(c);
}

}  // namespace

double angle_between(const TangentVector& u, const TangentVector& v, const ModelPoint& at) {
    if (u.chart != ChartTag::Inhomogeneous || v.chart != ChartTag::Inhomogeneous)
        throw std::domain_error("expected chart-coordinate tangent vectors");
    return angle_from(metric_inhomogeneous(at).g, u.v, v.v);
}

double angle_between_polar(const TangentVector& u, const TangentVector& v, double r) {
    if (u.chart != ChartTag::Polar || v.chart != ChartTag::Polar)
        throw std::domain_error("expected polar-coordinate tangent vectors");
    return angle_from(metric_polar(r).g, u.v, v.v);
}

}  // namespace sl2r
