#include "barbilian/metric.hpp"

#include "barbilian/error.hpp"

#include <algorithm>
#include <limits>

namespace barbilian {

namespace {

bool is_round(const Domain& domain) {
    switch (domain.kind()) {
    case DomainKind::HalfPlane:
    case DomainKind::Disk:
    case DomainKind::CircleMinusPoint: return true;
    default: return false;
    }
}

TangentCircles circles_for(const Domain& domain, Point2 a, Direction2 dir, MetricMode mode) {
    if (mode == MetricMode::Numeric) return tangent_circles_numeric(domain, a, dir);
    switch (domain.kind()) {
    case DomainKind::HalfPlane: return tangent_circles_halfplane(a, dir);
    case DomainKind::Disk:
    case DomainKind::CircleMinusPoint: return tangent_circles_disk(domain.rho(), a, dir);
    case DomainKind::Quadrant:
        if (mode == MetricMode::ClosedForm) return tangent_circles_quadrant(a, dir);
        return tangent_circles(domain, a, dir);
    case DomainKind::Polyline:
        if (mode == MetricMode::ClosedForm) fail(ErrorCode::Precondition, "polyline domains have no closed form");
        return tangent_circles_numeric(domain, a, dir);
    default: fail(ErrorCode::Precondition, "the induced metric needs a planar domain");
    }
}

void check_direction_independence(const Domain& domain, Point2 a, double lambda) {
    double lo = lambda;
    double hi = lambda;
    for (int k = 0; k < 8; ++k) {
        const double l = tangent_circles(domain, a, Direction2::from_angle(k * kPi / 8.0)).conformal_factor();
        lo = std::min(lo, l);
        hi = std::max(hi, l);
    }
    if (hi - lo > 1e-10 * std::max(1.0, lambda))
        fail(ErrorCode::Internal, "conformal factor depends on the direction on a round domain");
}

} // namespace

double quadrant_lambda(Point2 a, Direction2 dir) {
    require(a.x > 0.0 && a.y > 0.0, "quadrant metric needs x > 0 and y > 0");
    const Direction2 d = dir.canonical();
    require(!d.is_vertical(), "quadrant closed-form metric needs xdot != 0; use the numeric fallback");
    const double m = d.slope();
    const double w = std::sqrt(m * m + 1.0);
    // y m + x + (x + y) w, with y (m + w) evaluated without cancellation.
    const double wm = m >= 0.0 ? w + m : 1.0 / (w - m);
    const double numerator = a.x * (1.0 + w) + a.y * wm;
    return numerator / (2.0 * a.x * a.y * w);
}

double conformal_factor(const Domain& domain, Point2 a, Direction2 dir, MetricMode mode) {
    require(domain.contains(a), "point is not in J");
    if (domain.kind() == DomainKind::Quadrant && mode != MetricMode::Numeric) {
        if (mode == MetricMode::ClosedForm || quadrant_configuration_valid(a, dir)) return quadrant_lambda(a, dir);
        return tangent_circles_numeric(domain, a, dir).conformal_factor();
    }
    const double lambda = circles_for(domain, a, dir, mode).conformal_factor();
    if (is_round(domain) && mode != MetricMode::Numeric) check_direction_independence(domain, a, lambda);
    return lambda;
}

MetricSample metric_tensor(const Domain& domain, Point2 a, Direction2 dir, MetricMode mode) {
    require(domain.contains(a), "point is not in J");
    MetricSample s;
    s.point = a;
    s.direction = dir;
    if (domain.kind() == DomainKind::Quadrant && mode != MetricMode::Numeric &&
        (mode == MetricMode::ClosedForm || quadrant_configuration_valid(a, dir))) {
        s.lambda = quadrant_lambda(a, dir);
        const Direction2 d = dir.canonical();
        const double m = d.slope();
        const double w = std::sqrt(m * m + 1.0);
        s.R = a.x * w / (m >= 0.0 ? w + m : 1.0 / (w - m));
        s.r = a.y * w / (1.0 + w);
    } else {
        const TangentCircles tc = circles_for(domain, a, dir, mode);
        s.R = tc.R_plus;
        s.r = tc.R_minus;
        s.lambda = tc.conformal_factor();
    }
    s.g11 = s.g22 = s.lambda * s.lambda;
    s.g12 = 0.0;
    s.det_g = s.g11 * s.g22 - s.g12 * s.g12;
    return s;
}

CurvatureSample gaussian_curvature(const Domain& domain, Point2 a, std::optional<double> h) {
    require(is_round(domain), "curvature needs a half-plane or disk domain (direction-independent metric)");
    require(domain.contains(a), "point is not in J");
    const double d0 = domain.distance_to_boundary(a);
    const double step = h.value_or(1e-3 * d0);
    require(step > 0.0, "curvature step must be positive");
    require(step <= d0 / 10.0, "point too close to the boundary for the curvature stencil");

    const Direction2 e{1.0, 0.0};
    auto log_lambda = [&](Point2 p) { return std::log(circles_for(domain, p, e, MetricMode::Auto).conformal_factor()); };
    const double center = log_lambda(a);
    const double laplacian = (log_lambda({a.x + step, a.y}) + log_lambda({a.x - step, a.y}) +
                              log_lambda({a.x, a.y + step}) + log_lambda({a.x, a.y - step}) - 4.0 * center) /
                             (step * step);
    const double lambda = std::exp(center);
    return {a, step, -laplacian / (lambda * lambda)};
}

double path_length(const Domain& domain, std::span<const Point2> polyline, int subdivisions, MetricMode mode) {
    require(subdivisions >= 1, "subdivisions must be >= 1");
    for (const Point2& p : polyline) require(domain.contains(p), "polyline vertex is not in J");
    double total = 0.0;
    for (std::size_t i = 1; i < polyline.size(); ++i) {
        const Point2 a = polyline[i - 1];
        const Point2 b = polyline[i];
        const double len = distance(a, b);
        if (len == 0.0) continue;
        const Direction2 dir{b.x - a.x, b.y - a.y};
        const double piece = len / subdivisions;
        for (int k = 0; k < subdivisions; ++k) {
            const double t = (k + 0.5) / subdivisions;
            const Point2 mid = a + t * (b - a);
            require(domain.contains(mid), "polyline leaves J");
            total += conformal_factor(domain, mid, dir, mode) * piece;
        }
    }
    return total;
}

DerivativeEstimate metric_derivative(const InfluenceSpec& spec, const Domain& domain, Point2 a, Direction2 dir,
                                     std::span<const double> eps, const SearchOptions& opts) {
    require(!eps.empty(), "metric_derivative needs at least one step");
    for (std::size_t i = 0; i < eps.size(); ++i) {
        require(eps[i] > 0.0, "steps must be positive");
        if (i > 0) require(eps[i] < eps[i - 1], "steps must be strictly decreasing");
    }
    require(domain.contains(a), "point is not in J");
    const Point2 v = dir.unit();

    DerivativeEstimate out;
    for (double e : eps) {
        const Point2 b = a + e * v;
        require(domain.contains(b), "A + eps * v leaves J");
        out.eps.push_back(e);
        out.quotients.push_back(barbilian_distance(spec, domain, a, b, opts).distance / e);
    }
    // Neville's scheme evaluated at eps = 0.
    std::vector<double> p = out.quotients;
    const std::size_t n = p.size();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i + k < n; ++i) {
            p[i] = (eps[i] * p[i + 1] - eps[i + k] * p[i]) / (eps[i] - eps[i + k]);
        }
    }
    out.estimate = p[0];
    return out;
}

} // namespace barbilian
