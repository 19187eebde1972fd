#include "barbilian/tangent.hpp"

#include "barbilian/error.hpp"

#include <limits>

namespace barbilian {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sqrt(m^2 + 1) + m without cancellation for large negative m.
double w_plus_m(double m, double w) { return m >= 0.0 ? w + m : 1.0 / (w - m); }

void fill_centers(TangentCircles& tc, Point2 a, Point2 n) {
    if (std::isfinite(tc.R_plus)) tc.center_plus = a + tc.R_plus * n;
    if (std::isfinite(tc.R_minus)) tc.center_minus = a - tc.R_minus * n;
}

} // namespace

TangentCircles tangent_circles_halfplane(Point2 a, Direction2 dir) {
    require(a.y > 0.0, "half-plane tangent circles need y > 0");
    const Direction2 d = dir.canonical();
    const Point2 n = d.unit_normal();
    TangentCircles tc;
    if (d.is_vertical()) {
        tc.R_plus = tc.R_minus = a.y;
    } else {
        const double m = d.slope();
        const double w = std::sqrt(m * m + 1.0);
        // y w / (w - 1) with w - 1 = m^2 / (w + 1); +inf at m = 0.
        tc.R_plus = m == 0.0 ? kInf : a.y * w * (w + 1.0) / (m * m);
        tc.R_minus = a.y * w / (1.0 + w);
    }
    fill_centers(tc, a, n);
    if (tc.center_plus) tc.tangency_plus = Point2{tc.center_plus->x, 0.0};
    if (tc.center_minus) tc.tangency_minus = Point2{tc.center_minus->x, 0.0};
    return tc;
}

TangentCircles tangent_circles_disk(double rho, Point2 a, Direction2 dir) {
    require(rho > 0.0, "rho must be positive");
    const double inside = rho * rho - a.x * a.x - a.y * a.y;
    require(inside > 0.0, "disk tangent circles need a point strictly inside");
    const Direction2 d = dir.canonical();
    const Point2 n = d.unit_normal();
    TangentCircles tc;
    if (d.is_vertical()) {
        tc.R_plus = 0.5 * inside / (rho - a.x);
        tc.R_minus = 0.5 * inside / (rho + a.x);
    } else {
        const double m = d.slope();
        const double w = std::sqrt(m * m + 1.0);
        tc.R_plus = 0.5 * w * inside / (rho * w - a.x * m + a.y);
        tc.R_minus = 0.5 * w * inside / (rho * w + a.x * m - a.y);
    }
    fill_centers(tc, a, n);
    auto touch = [rho](Point2 c) { return (rho / norm(c)) * c; };
    tc.tangency_plus = touch(*tc.center_plus);
    tc.tangency_minus = touch(*tc.center_minus);
    return tc;
}

namespace {

TangentCircles quadrant_closed_form(Point2 a, Direction2 dir) {
    require(a.x > 0.0 && a.y > 0.0, "quadrant tangent circles need x > 0 and y > 0");
    const Direction2 d = dir.canonical();
    require(!d.is_vertical(), "quadrant closed form needs a non-vertical direction; use the numeric solver");
    const double m = d.slope();
    const double w = std::sqrt(m * m + 1.0);
    TangentCircles tc;
    tc.R_plus = a.x * w / w_plus_m(m, w);
    tc.R_minus = a.y * w / (1.0 + w);
    fill_centers(tc, a, d.unit_normal());
    tc.tangency_plus = Point2{0.0, tc.center_plus->y};
    tc.tangency_minus = Point2{tc.center_minus->x, 0.0};
    return tc;
}

bool closed_form_valid(const TangentCircles& tc) {
    // Circle 1 sits at x = R_plus and must not reach below the x-axis; circle 2 sits at
    // y = R_minus and must not reach left of the y-axis.
    constexpr double slack = 1e-12;
    return tc.center_plus->y >= tc.R_plus * (1.0 - slack) && tc.center_minus->x >= tc.R_minus * (1.0 - slack);
}

} // namespace

bool quadrant_configuration_valid(Point2 a, Direction2 dir) {
    if (dir.is_vertical()) return false;
    return closed_form_valid(quadrant_closed_form(a, dir));
}

TangentCircles tangent_circles_quadrant(Point2 a, Direction2 dir) {
    TangentCircles tc = quadrant_closed_form(a, dir);
    require(closed_form_valid(tc),
            "slope outside the quadrant closed-form validity region (a circle first touches the other axis); "
            "use the numeric solver");
    return tc;
}

TangentCircles tangent_circles_numeric(const Domain& domain, Point2 a, Direction2 dir, double tol) {
    require(domain.is_planar(), "tangent circles need a planar domain");
    require(domain.contains(a), "point is not in J");
    require(tol > 0.0, "tolerance must be positive");
    const Point2 n = dir.canonical().unit_normal();
    const double d0 = domain.distance_to_boundary(a);

    auto solve = [&](double side) -> double {
        auto h = [&](double s) { return domain.distance_to_boundary(a + (side * s) * n) - s; };
        double lo = 0.0;
        double hi = 0.5 * d0;
        while (h(hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
            if (hi > 1e6 * d0) return kInf;
        }
        for (int iter = 0; hi - lo > tol * hi; ++iter) {
            if (iter > 400) fail(ErrorCode::Convergence, "tangent-circle bisection did not converge");
            const double mid = 0.5 * (lo + hi);
            (h(mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    TangentCircles tc;
    tc.R_plus = solve(1.0);
    tc.R_minus = solve(-1.0);
    fill_centers(tc, a, n);
    auto touch = [&](Point2 c) {
        Point2 foot;
        domain.distance_to_boundary(c, &foot);
        return foot;
    };
    if (tc.center_plus) tc.tangency_plus = touch(*tc.center_plus);
    if (tc.center_minus) tc.tangency_minus = touch(*tc.center_minus);
    return tc;
}

TangentCircles tangent_circles(const Domain& domain, Point2 a, Direction2 dir) {
    require(domain.contains(a), "point is not in J");
    switch (domain.kind()) {
    case DomainKind::HalfPlane: return tangent_circles_halfplane(a, dir);
    case DomainKind::Disk:
    case DomainKind::CircleMinusPoint: return tangent_circles_disk(domain.rho(), a, dir);
    case DomainKind::Quadrant:
        if (quadrant_configuration_valid(a, dir)) return tangent_circles_quadrant(a, dir);
        return tangent_circles_numeric(domain, a, dir);
    case DomainKind::Polyline: return tangent_circles_numeric(domain, a, dir);
    case DomainKind::ParallelPlanes:
    case DomainKind::ConcentricSpheres: break;
    }
    fail(ErrorCode::Precondition, "tangent circles need a planar domain");
}

} // namespace barbilian
