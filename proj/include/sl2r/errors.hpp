#pragma once

#include <stdexcept>
#include <string>

namespace sl2r {

// a point left the x0 > 0 coordinate patch
struct chart_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an iterative solver missed its target; carries the best residual seen
struct solver_error : std::runtime_error {
    solver_error(const std::string& what, double best_residual)
        : std::runtime_error(what), residual(best_residual) {}
    double residual;
};

// collinear or otherwise degenerate input triangle
struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sl2r
