#include "sl2r/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>

#include "sl2r/errors.hpp"
#include "sl2r/isometry.hpp"

namespace sl2r {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

// continuous extension of atan(b * tan(u)) with value 0 at u = 0, b > 0
double unwrap_atan(double b, double u) {
    const double n = std::floor(u / kPi + 0.5);
    const double du = u - n * kPi;
    double v;
    if (std::abs(std::abs(du) - kHalfPi) < 1e-15)
        v = du > 0.0 ? kHalfPi : -kHalfPi;
    else
        v = std::atan(b * std::tan(du));
    return n * kPi + v;
}

}  // namespace

Regime regime_of(double alpha) {
    const double c2a = std::cos(2.0 * alpha);
    if (std::abs(c2a) < kLightBand) return Regime::LightLike;
    return c2a > 0.0 ? Regime::H2Like : Regime::FibreLike;
}

Direction Direction::of(double lambda, double alpha) {
    return {lambda, alpha, regime_of(alpha)};
}

PolarState geodesic_polar(double s, double alpha) {
    if (alpha < 0.0) {
        PolarState p = geodesic_polar(s, -alpha);
        return {p.r, -p.theta, -p.phi};
    }
    const double c2a = std::cos(2.0 * alpha);
    const double sa = std::sin(alpha);
    const double ca = std::cos(alpha);
    if (std::abs(c2a) < kLightBand) {
        const double x = s / std::sqrt(2.0);
        const double th = -std::atan(x);
        return {std::asinh(x), th, std::sqrt(2.0) * s + th};
    }
    if (c2a > 0.0) {
        const double k = std::sqrt(c2a);
        const double ks = k * s;
        // asinh((ca/k) sinh(ks)) without overflowing sinh
        const double r = ks > 350.0 ? ks + std::log(ca / k) : std::asinh(ca / k * std::sinh(ks));
        const double th = -std::atan(sa / k * std::tanh(ks));
        return {r, th, 2.0 * s * sa + th};
    }
    const double bigk = std::sqrt(-c2a);
    const double u = bigk * s;
    const double r = std::asinh(ca / bigk * std::sin(u));
    const double th = -unwrap_atan(sa / bigk, u);
    return {r, th, 2.0 * s * sa + th};
}

PolarVelocity geodesic_polar_velocity(double s, double alpha) {
    if (alpha < 0.0) {
        PolarVelocity v = geodesic_polar_velocity(s, -alpha);
        return {v.dr, -v.dtheta, -v.dphi};
    }
    const double c2a = std::cos(2.0 * alpha);
    const double sa = std::sin(alpha);
    const double ca = std::cos(alpha);
    if (std::abs(c2a) < kLightBand) {
        const double w = 1.0 + s * s / 2.0;
        const double dr = (1.0 / std::sqrt(2.0)) / std::sqrt(w);
        const double dth = -(1.0 / std::sqrt(2.0)) / w;
        return {dr, dth, std::sqrt(2.0) + dth};
    }
    if (c2a > 0.0) {
        const double k = std::sqrt(c2a);
        const double a = ca / k;
        const double b = sa / k;
        const double ks = k * s;
        if (ks > 350.0) return {k, 0.0, 2.0 * sa};
        const double sh = std::sinh(ks);
        const double ch = std::cosh(ks);
        const double dr = a * k * ch / std::sqrt(1.0 + a * a * sh * sh);
        const double dth = -b * k / (ch * ch + b * b * sh * sh);
        return {dr, dth, 2.0 * sa + dth};
    }
    const double bigk = std::sqrt(-c2a);
    const double a = ca / bigk;
    const double b = sa / bigk;
    const double u = bigk * s;
    const double sn = std::sin(u);
    const double cn = std::cos(u);
    const double dr = a * bigk * cn / std::sqrt(1.0 + a * a * sn * sn);
    const double dth = -b * bigk / (cn * cn + b * b * sn * sn);
    return {dr, dth, 2.0 * sa + dth};
}

ModelPoint geodesic_point(double s, const Direction& dir) {
    const PolarState p = geodesic_polar(s, dir.alpha);
    if (std::abs(p.phi) >= kHalfPi) throw chart_error("geodesic left the x0 > 0 patch");
    const double tr = std::tanh(p.r);
    const double w = p.theta - p.phi + dir.lambda;
    return {std::tan(p.phi), tr / std::cos(p.phi) * std::cos(w), tr / std::cos(p.phi) * std::sin(w)};
}

Vec3 geodesic_tangent_at_origin(const Direction& dir) {
    return {std::sin(dir.alpha), std::cos(dir.alpha) * std::cos(dir.lambda),
            std::cos(dir.alpha) * std::sin(dir.lambda)};
}

namespace {

// state layout: r, theta, phi, dr, dtheta, dphi
using OdeState = std::array<double, 6>;

OdeState rhs(const OdeState& y) {
    const double s2r = std::sinh(2.0 * y[0]);
    const double c2r = std::cosh(2.0 * y[0]);
    const double ddr = s2r * y[4] * y[5] + 0.5 * (std::sinh(4.0 * y[0]) - s2r) * y[4] * y[4];
    const double ddth = -(2.0 * y[3] / s2r) * ((3.0 * c2r - 1.0) * y[4] + 2.0 * y[5]);
    const double sh = std::sinh(y[0]);
    const double ddph = 2.0 * y[3] * std::tanh(y[0]) * (2.0 * sh * sh * y[4] + y[5]);
    return {y[3], y[4], y[5], ddr, ddth, ddph};
}

OdeState axpy(const OdeState& y, double c, const OdeState& d) {
    OdeState out;
    for (int i = 0; i < 6; ++i) out[i] = y[i] + c * d[i];
    return out;
}

}  // namespace

std::vector<PathSample> integrate_geodesic(const Direction& dir, double s_end, double h) {
    if (!(h > 0.0)) throw std::domain_error("step size must be positive");
    const double s0 = 1e-4;  // clears the r = 0 singularity of the theta equation
    if (!(s_end > s0)) throw std::domain_error("s_end must exceed the seeding point");

    const PolarState p = geodesic_polar(s0, dir.alpha);
    const PolarVelocity v = geodesic_polar_velocity(s0, dir.alpha);
    OdeState y{p.r, p.theta, p.phi, v.dr, v.dtheta, v.dphi};

    std::vector<PathSample> path;
    const auto n = static_cast<std::size_t>(std::ceil((s_end - s0) / h));
    path.reserve(n + 1);
    double s = s0;
    path.push_back({s, {y[0], y[1], y[2]}});
    for (std::size_t i = 0; i < n; ++i) {
        const double step = std::min(h, s_end - s);
        const OdeState k1 = rhs(y);
        const OdeState k2 = rhs(axpy(y, step / 2.0, k1));
        const OdeState k3 = rhs(axpy(y, step / 2.0, k2));
        const OdeState k4 = rhs(axpy(y, step, k3));
        for (int c = 0; c < 6; ++c) y[c] += step / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        s += step;
        path.push_back({s, {y[0], y[1], y[2]}});
    }
    return path;
}

namespace {

// solves phi(s, alpha) = phi_t for s at fixed alpha > 0, phi_t > 0;
// dphi/ds lies in [sin a, 2 sin a], so [phi_t / (2 sin a), phi_t / sin a]
// brackets the root; fibre-like directions are capped at their chart pole
std::optional<double> solve_arc_length(double alpha, double phi_t) {
    const double sa = std::sin(alpha);
    double lo = phi_t / (2.0 * sa);
    double hi = phi_t / sa;
    const double c2a = std::cos(2.0 * alpha);
    if (c2a < -kLightBand) hi = std::min(hi, kHalfPi / std::sqrt(-c2a));
    if (geodesic_polar(lo, alpha).phi - phi_t > 0.0) return std::nullopt;
    if (geodesic_polar(hi, alpha).phi - phi_t < 0.0) return std::nullopt;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (geodesic_polar(mid, alpha).phi <= phi_t)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-16 * hi) break;
    }
    return 0.5 * (lo + hi);
}

struct Shot {
    double f;  // r(s(alpha), alpha) - r_t
    double s;
};

std::optional<Shot> shoot(double alpha, double phi_t, double r_t) {
    const auto s = solve_arc_length(alpha, phi_t);
    if (!s) return std::nullopt;
    return Shot{geodesic_polar(*s, alpha).r - r_t, *s};
}

// altitude scan grid: uniform plus log-refined ends, so boundary-hugging
// solutions (nearly planar or nearly fibre directions) are not skipped
std::vector<double> altitude_grid() {
    std::set<double> g;
    for (int j = 1; j <= 160; ++j) g.insert(kHalfPi * j / 160.0);
    for (int j = 0; j <= 64; ++j) {
        const double t = std::pow(10.0, -16.0 + 16.0 * j / 64.0);
        if (t > 0.0 && t < 1.0) {
            g.insert(kHalfPi * t);
            g.insert(kHalfPi * (1.0 - t));
        }
    }
    return {g.begin(), g.end()};
}

}  // namespace

GeodesicArc solve_geodesic_to(const ModelPoint& target) {
    const HyperboloidCoords hc = inhomogeneous_to_hyperboloid(target);
    const double r_t = hc.r;
    const double th_t = hc.theta;
    const double ph_t = hc.phi;

    if (r_t < 1e-13 && std::abs(ph_t) < 1e-13)
        throw std::domain_error("target coincides with the origin");

    auto finish = [&](double s, double alpha, double lambda) {
        GeodesicArc arc{Direction::of(normalize_angle(lambda), alpha), s, 0.0};
        const ModelPoint got = geodesic_point(s, arc.dir);
        arc.residual = norm(got.vec() - target.vec());
        return arc;
    };

    if (r_t < 1e-13)  // fibre axis: lambda is undefined, fixed to 0
        return finish(std::abs(ph_t), ph_t > 0.0 ? kHalfPi : -kHalfPi, 0.0);
    if (std::abs(ph_t) < 1e-13)  // base-plane direction
        return finish(r_t, 0.0, th_t);

    const bool mirrored = ph_t < 0.0;
    const double phi_t = mirrored ? -ph_t : ph_t;

    static const std::vector<double> grid = altitude_grid();
    std::optional<std::pair<double, double>> best;  // (s, alpha)

    std::optional<Shot> prev = shoot(grid.front(), phi_t, r_t);
    double prev_a = grid.front();
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double a = grid[i];
        const std::optional<Shot> cur = shoot(a, phi_t, r_t);
        if (cur && prev && (cur->f == 0.0 || prev->f * cur->f < 0.0)) {
            double lo = prev_a, hi = a, flo = prev->f;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const std::optional<Shot> sm = shoot(mid, phi_t, r_t);
                if (!sm) break;
                if (flo * sm->f <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = sm->f;
                }
                if (hi - lo < 1e-16) break;
            }
            const double a_root = 0.5 * (lo + hi);
            if (const auto sr = shoot(a_root, phi_t, r_t))
                if (!best || sr->s < best->first) best = {sr->s, a_root};
        }
        prev = cur;
        prev_a = a;
    }

    if (!best) throw solver_error("no geodesic reaches the target", r_t);

    double s = best->first;
    double alpha = best->second;
    if (mirrored) alpha = -alpha;
    const double lambda = th_t - geodesic_polar(s, alpha).theta;
    GeodesicArc arc = finish(s, alpha, lambda);
    if (arc.residual > 1e-9)
        throw solver_error("geodesic solver residual above tolerance", arc.residual);
    return arc;
}

double geodesic_distance(const ModelPoint& p, const ModelPoint& q) {
    const IsometryMatrix back = translation_to_inverse(lift(p));
    const ModelPoint image = projective_to_inhomogeneous(apply(back, lift(q)));
    return solve_geodesic_to(image).s;
}

}  // namespace sl2r
