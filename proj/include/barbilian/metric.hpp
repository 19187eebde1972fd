#pragma once

#include "barbilian/distance.hpp"
#include "barbilian/tangent.hpp"

#include <optional>
#include <span>
#include <vector>

namespace barbilian {

enum class MetricMode {
    Auto,       // closed form where valid, tangent-circle solver otherwise
    ClosedForm, // closed form only; quadrant uses the slope formula even outside its validity region
    Numeric,    // tangent-circle solver only
};

/// ds^2 = lambda^2 (dx^2 + dy^2) at `point` for the given velocity.
struct MetricSample {
    Point2 point;
    Direction2 direction{1.0, 0.0};
    double R = 0.0;
    double r = 0.0;
    double lambda = 0.0;
    double g11 = 0.0;
    double g12 = 0.0;
    double g22 = 0.0;
    double det_g = 0.0;
};

struct CurvatureSample {
    Point2 point;
    double step_h = 0.0;
    double kappa = 0.0;
};

/// lambda = 1/2 (1/R + 1/r). On the half-plane, disk and circle-minus-point the value is
/// checked to be direction-independent across 8 directions.
double conformal_factor(const Domain& domain, Point2 a, Direction2 dir, MetricMode mode = MetricMode::Auto);

/// Quadrant closed form: lambda^2 = (y m + x + (x + y) sqrt(m^2+1))^2 / (4 x^2 y^2 (m^2+1)), m = ydot/xdot.
double quadrant_lambda(Point2 a, Direction2 dir);

MetricSample metric_tensor(const Domain& domain, Point2 a, Direction2 dir, MetricMode mode = MetricMode::Auto);

/// kappa = -(Laplacian of ln lambda) / lambda^2 from the 5-point stencil. `h` defaults to
/// 1e-3 * dist(A, K) and must not exceed dist(A, K) / 10.
CurvatureSample gaussian_curvature(const Domain& domain, Point2 a, std::optional<double> h = std::nullopt);

/// Midpoint-rule length of a polyline under the induced metric; each edge is split into
/// `subdivisions` pieces.
double path_length(const Domain& domain, std::span<const Point2> polyline, int subdivisions = 1,
                   MetricMode mode = MetricMode::Auto);

struct DerivativeEstimate {
    double estimate = 0.0;
    std::vector<double> eps;
    std::vector<double> quotients; // d(A, A + eps v) / eps
};

/// Richardson (Neville) extrapolation to eps = 0 of d(A, A + eps v)/eps; the limit is lambda(A, v).
DerivativeEstimate metric_derivative(const InfluenceSpec& spec, const Domain& domain, Point2 a, Direction2 dir,
                                     std::span<const double> eps, const SearchOptions& opts = {});

} // namespace barbilian
