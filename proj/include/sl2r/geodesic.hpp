#pragma once

#include <vector>

#include "sl2r/linalg.hpp"
#include "sl2r/metric.hpp"
#include "sl2r/point.hpp"

namespace sl2r {

// split by the initial altitude: |alpha| < pi/4 stays hyperbolic-plane-like,
// |alpha| = pi/4 is the transitional light-like family, |alpha| > pi/4 fibre-like
enum class Regime { H2Like, LightLike, FibreLike };

// half-width of the band around cos(2*alpha) = 0 treated as light-like
inline constexpr double kLightBand = 1e-12;

Regime regime_of(double alpha);

// geographic direction at the origin: longitude lambda in (-pi, pi],
// altitude alpha in [-pi/2, pi/2]
struct Direction {
    double lambda{};
    double alpha{};
    Regime regime = Regime::H2Like;

    static Direction of(double lambda, double alpha);
};

struct GeodesicArc {
    Direction dir;
    double s{};      // arc length
    double residual{};  // chart distance to the requested target, for solved arcs
};

struct PolarState {
    double r{}, theta{}, phi{};
};

struct PolarVelocity {
    double dr{}, dtheta{}, dphi{};
};

// closed-form unit-speed geodesic through the origin, by regime; theta is
// continued smoothly past tan poles, phi is the unbounded fibre coordinate
PolarState geodesic_polar(double s, double alpha);
PolarVelocity geodesic_polar_velocity(double s, double alpha);

// chart point of the geodesic; throws chart_error once |phi| >= pi/2
ModelPoint geodesic_point(double s, const Direction& dir);

// unit Euclidean tangent (sin a, cos a cos l, cos a sin l) at the origin
Vec3 geodesic_tangent_at_origin(const Direction& dir);

struct PathSample {
    double s{};
    PolarState state;
};

// fixed-step RK4 integration of the second-order geodesic system, seeded at
// s0 = 1e-4 from the closed form to clear the r = 0 coordinate singularity;
// exists to cross-validate the closed forms
std::vector<PathSample> integrate_geodesic(const Direction& dir, double s_end, double h = 1e-4);

// inverse problem: direction and arc length reaching the target, smallest s;
// targets on the fibre axis use lambda = 0; throws solver_error on failure
GeodesicArc solve_geodesic_to(const ModelPoint& target);

// arc length from p to q: translate p to the origin, then solve
double geodesic_distance(const ModelPoint& p, const ModelPoint& q);

}  // namespace sl2r
