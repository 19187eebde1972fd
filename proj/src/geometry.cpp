#include "barbilian/geometry.hpp"

#include "barbilian/error.hpp"

#include <limits>

namespace barbilian {

Direction2::Direction2(double dx, double dy) : dx_(dx), dy_(dy) {
    require(std::isfinite(dx) && std::isfinite(dy), "direction components must be finite");
    require(dx != 0.0 || dy != 0.0, "direction must be nonzero");
}

double Direction2::slope() const {
    if (dx_ == 0.0) return std::numeric_limits<double>::infinity();
    return dy_ / dx_;
}

Direction2 Direction2::canonical() const {
    if (dx_ < 0.0 || (dx_ == 0.0 && dy_ < 0.0)) return {-dx_, -dy_};
    return *this;
}

Point2 Direction2::unit() const {
    const double len = length();
    return {dx_ / len, dy_ / len};
}

Point2 Direction2::unit_normal() const {
    const Point2 u = unit();
    return {-u.y, u.x};
}

Direction2 Direction2::scaled(double c) const { return {c * dx_, c * dy_}; }

} // namespace barbilian
