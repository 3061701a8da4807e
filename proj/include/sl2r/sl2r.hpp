#pragma once

#include "sl2r/errors.hpp"
#include "sl2r/geodesic.hpp"
#include "sl2r/isometry.hpp"
#include "sl2r/linalg.hpp"
#include "sl2r/metric.hpp"
#include "sl2r/point.hpp"
#include "sl2r/translation_curve.hpp"
#include "sl2r/triangle.hpp"

namespace sl2r {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace sl2r
