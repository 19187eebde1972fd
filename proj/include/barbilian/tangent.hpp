#pragma once

#include "barbilian/domain.hpp"

#include <optional>

namespace barbilian {

/// The two circles tangent to the line (A, direction) at A and tangent to K.
///
/// Radii are extended reals: +inf stands for a circle degenerated into a line, and then
/// 1/R = 0. The "plus" circle has its center on the side of the unit normal obtained by
/// rotating the canonical direction (xdot > 0, or vertical upward) by +90 degrees.
struct TangentCircles {
    double R_plus = 0.0;
    double R_minus = 0.0;
    std::optional<Point2> center_plus;
    std::optional<Point2> center_minus;
    std::optional<Point2> tangency_plus;
    std::optional<Point2> tangency_minus;

    /// 1/2 (1/R + 1/r)
    double conformal_factor() const { return 0.5 * (1.0 / R_plus + 1.0 / R_minus); }
};

TangentCircles tangent_circles_halfplane(Point2 a, Direction2 dir);
TangentCircles tangent_circles_disk(double rho, Point2 a, Direction2 dir);

/// Closed forms for the open quadrant: the plus circle touches the y-axis, the minus
/// circle the x-axis. Throws a precondition error for vertical directions and for slopes
/// where either circle first touches the other axis.
TangentCircles tangent_circles_quadrant(Point2 a, Direction2 dir);
bool quadrant_configuration_valid(Point2 a, Direction2 dir);

/// Bracketing plus bisection on h(s) = dist(A + s n, K) - s for each side. h is
/// non-increasing, so the bisection boundary is the first touch. A side without a root
/// below 1e6 * dist(A, K) gets R = +inf.
TangentCircles tangent_circles_numeric(const Domain& domain, Point2 a, Direction2 dir, double tol = 1e-14);

/// Closed form where one exists and is valid, numeric solver otherwise.
TangentCircles tangent_circles(const Domain& domain, Point2 a, Direction2 dir);

} // namespace barbilian
