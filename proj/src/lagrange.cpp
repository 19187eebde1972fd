#include "barbilian/lagrange.hpp"

#include "barbilian/error.hpp"

#include <algorithm>

namespace barbilian {

namespace {

void require_chart(Point2 a, Direction2 v) {
    require(a.x > 0.0 && a.y > 0.0, "point must lie in the open quadrant");
    require(v.dx() > 0.0, "velocity must satisfy xdot > 0");
}

} // namespace

double quadrant_g11(Point2 a, Direction2 velocity) {
    require_chart(a, velocity);
    const double m = velocity.dy() / velocity.dx();
    const double w2 = m * m + 1.0;
    const double numerator = a.y * m + a.x + (a.x + a.y) * std::sqrt(w2);
    return numerator * numerator / (4.0 * a.x * a.x * a.y * a.y * w2);
}

double quadrant_g12(Point2 a, Direction2 velocity) {
    require_chart(a, velocity);
    return 0.0;
}

CartanSample cartan_asymmetry(Point2 a, Direction2 velocity, std::optional<double> h, double tol) {
    require_chart(a, velocity);
    const double len = velocity.length();
    const double step = h.value_or(1e-5 * len);
    require(step > 0.0 && step <= 1e-3 * len, "step must lie in (0, 1e-3 |v|]");
    require(velocity.dx() - step > 0.0, "perturbed velocity leaves the xdot > 0 chart");

    const double xd = velocity.dx();
    const double yd = velocity.dy();
    CartanSample s;
    s.point = a;
    s.direction = velocity;
    s.step_h = step;
    s.dg11_dydot = (quadrant_g11(a, {xd, yd + step}) - quadrant_g11(a, {xd, yd - step})) / (2.0 * step);
    s.dg12_dxdot = (quadrant_g12(a, {xd + step, yd}) - quadrant_g12(a, {xd - step, yd})) / (2.0 * step);
    s.symmetric = std::abs(s.dg11_dydot - s.dg12_dxdot) <= tol;
    return s;
}

double check_homogeneity(Point2 a, Direction2 velocity, std::span<const double> scales) {
    const double base = quadrant_g11(a, velocity);
    double worst = 0.0;
    for (double c : scales) {
        require(c > 0.0 && std::isfinite(c), "homogeneity scales must be positive");
        worst = std::max(worst, std::abs(quadrant_g11(a, velocity.scaled(c)) - base) / base);
    }
    return worst;
}

bool check_positive_definite(Point2 a, Direction2 velocity) {
    const double g11 = quadrant_g11(a, velocity);
    const double g12 = quadrant_g12(a, velocity);
    const double det = g11 * g11 - g12 * g12;
    return g11 > 0.0 && det > 0.0;
}

} // namespace barbilian
