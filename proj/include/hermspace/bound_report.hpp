#pragma once

#include <algorithm>
#include <cmath>

namespace hermspace {

/// Outcome of a numerical inequality check lower <= measured <= upper.
///
/// The comparison is relaxed by slack = quad_tolerance * max(1, |measured|), which
/// absorbs quadrature or rounding error in `measured`. Use +/-infinity for a
/// one-sided check.
struct BoundReport {
    double lower = 0.0;
    double measured = 0.0;
    double upper = 0.0;
    double quad_tolerance = 0.0;
    bool pass = false;

    static BoundReport make(double lower, double measured, double upper, double quad_tolerance) {
        const double slack = quad_tolerance * std::max(1.0, std::abs(measured));
        const bool ok = std::isfinite(measured) && lower - slack <= measured &&
                        measured <= upper + slack;
        return {lower, measured, upper, quad_tolerance, ok};
    }
};

}  // namespace hermspace
