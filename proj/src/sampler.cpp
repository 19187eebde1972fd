#include "barbilian/sampler.hpp"

#include "barbilian/error.hpp"

#include <algorithm>
#include <limits>

namespace barbilian {

JSampler::JSampler(const Domain& domain, std::uint64_t seed, bool allow_near_boundary, double near_boundary)
    : domain_(&domain), rng_(seed), allow_near_boundary_(allow_near_boundary), near_boundary_(near_boundary) {
    switch (domain.kind()) {
    case DomainKind::HalfPlane: x_lo_ = -5, x_hi_ = 5, y_lo_ = 0, y_hi_ = 5; break;
    case DomainKind::Quadrant: x_lo_ = 0, x_hi_ = 5, y_lo_ = 0, y_hi_ = 5; break;
    case DomainKind::Disk:
    case DomainKind::CircleMinusPoint:
        x_lo_ = y_lo_ = -domain.rho();
        x_hi_ = y_hi_ = domain.rho();
        break;
    case DomainKind::Polyline: {
        x_lo_ = y_lo_ = std::numeric_limits<double>::infinity();
        x_hi_ = y_hi_ = -std::numeric_limits<double>::infinity();
        for (const auto& chart : domain.charts()) {
            for (int k = 0; k <= 64; ++k) {
                const double t = chart.t_lo() + (chart.t_hi() - chart.t_lo()) * k / 64.0;
                const Point3 p = chart.point(t);
                x_lo_ = std::min(x_lo_, p.x), x_hi_ = std::max(x_hi_, p.x);
                y_lo_ = std::min(y_lo_, p.y), y_hi_ = std::max(y_hi_, p.y);
            }
        }
        const double pad = 0.1 * std::max({x_hi_ - x_lo_, y_hi_ - y_lo_, 1.0});
        x_lo_ -= pad, x_hi_ += pad, y_lo_ -= pad, y_hi_ += pad;
        break;
    }
    case DomainKind::ParallelPlanes:
    case DomainKind::ConcentricSpheres: break;
    }
}

Point3 JSampler::candidate() {
    switch (domain_->kind()) {
    case DomainKind::HalfPlane:
    case DomainKind::Quadrant: {
        // Upper-closed boxes: 1 - u lies in (0, 1].
        const double x = domain_->kind() == DomainKind::Quadrant ? x_hi_ * (1.0 - rng_.uniform())
                                                                  : rng_.uniform(x_lo_, x_hi_);
        const double y = y_hi_ * (1.0 - rng_.uniform());
        return {x, y, 0.0};
    }
    case DomainKind::ConcentricSpheres: {
        const double z = rng_.uniform(-1.0, 1.0);
        const double phi = rng_.uniform(0.0, 2.0 * kPi);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double r = domain_->r_j();
        return {r * s * std::cos(phi), r * s * std::sin(phi), r * z};
    }
    default: {
        const double x = rng_.uniform(x_lo_, x_hi_);
        const double y = rng_.uniform(y_lo_, y_hi_);
        return {x, y, 0.0};
    }
    }
}

bool JSampler::acceptable(Point3 p) const {
    if (!domain_->contains(p)) return false;
    if (allow_near_boundary_ || !domain_->is_planar()) return true;
    return domain_->distance_to_boundary(p.xy()) >= near_boundary_;
}

Point3 JSampler::next() {
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        const Point3 p = candidate();
        if (acceptable(p)) return p;
    }
    fail(ErrorCode::Precondition, "sampler could not find a point of J in its bounding box");
}

std::pair<Point3, Point3> JSampler::next_pair() {
    const Point3 a = next();
    Point3 b = next();
    while (b == a) b = next();
    return {a, b};
}

} // namespace barbilian
