#pragma once

#include "sl2r/geodesic.hpp"
#include "sl2r/point.hpp"

namespace sl2r {

struct TranslationArc {
    Direction dir;
    double s{};  // translation arc length
};

// radial profile times the unit direction vector; Euclidean straight ray in
// the chart; throws chart_error when the fibre-like profile passes its pole
ModelPoint translation_curve_point(double s, const Direction& dir);

// closed-form inversion for a target seen from the origin;
// throws std::domain_error when no curve reaches the target
TranslationArc solve_translation_to(const ModelPoint& target);

double translation_distance(const ModelPoint& p, const ModelPoint& q);

// samples the connecting curve and tests chart collinearity within tol
bool is_straight_chord(const ModelPoint& p, const ModelPoint& q, int samples = 16,
                       double tol = 1e-10);

}  // namespace sl2r
