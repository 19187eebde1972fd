#pragma once

#include "barbilian/geometry.hpp"

#include <optional>
#include <span>

namespace barbilian {

// The quadrant metric as a generalized Lagrange metric g_ij(x, y, xdot, ydot) on xdot > 0.

double quadrant_g11(Point2 a, Direction2 velocity);
/// Identically zero: the tensor is conformal.
double quadrant_g12(Point2 a, Direction2 velocity);

struct CartanSample {
    Point2 point;
    Direction2 direction{1.0, 0.0};
    double step_h = 0.0;
    double dg11_dydot = 0.0;
    double dg12_dxdot = 0.0;
    bool symmetric = false;
};

/// Central differences of g11 in ydot and g12 in xdot. `symmetric` records whether the
/// Cartan symmetry condition dg11/dydot == dg12/dxdot holds to `tol`.
/// `h` defaults to 1e-5 |v| and must not exceed 1e-3 |v|.
CartanSample cartan_asymmetry(Point2 a, Direction2 velocity, std::optional<double> h = std::nullopt,
                              double tol = 1e-9);

/// max over c of |g11(A, c v) - g11(A, v)| / g11(A, v); scales must be positive.
double check_homogeneity(Point2 a, Direction2 velocity, std::span<const double> scales);

bool check_positive_definite(Point2 a, Direction2 velocity);

} // namespace barbilian
