#include "search_frame.hpp"

#include <cmath>

namespace barbilian::detail {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double wrap(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

double atan_or_limit(double v) {
    if (std::isinf(v)) return v > 0 ? kPi / 2.0 : -kPi / 2.0;
    return std::atan(v);
}

} // namespace

SearchFrame::SearchFrame(const BoundaryChart& chart, Point3 focus, bool planar) : chart_(&chart), focus_(focus) {
    u_lo_ = chart.t_lo();
    u_hi_ = chart.t_hi();

    if (const auto* line = std::get_if<LineGeometry>(&chart.geometry())) {
        const double len2 = dot(line->step, line->step);
        if (len2 == 0.0) return; // single-point chart
        const double t_f = dot(focus - line->origin, line->step) / len2;
        const double d = distance(focus, line->origin + t_f * line->step);
        const bool infinite = std::isinf(chart.t_lo()) || std::isinf(chart.t_hi());
        if (d > 0.0 || infinite) {
            map_ = Map::Tan;
            center_ = t_f;
            scale_ = d > 0.0 ? d / std::sqrt(len2) : 1.0;
            u_lo_ = atan_or_limit((chart.t_lo() - center_) / scale_);
            u_hi_ = atan_or_limit((chart.t_hi() - center_) / scale_);
        }
        return;
    }

    const auto& arc = std::get<ArcGeometry>(chart.geometry());
    const Point3 rel = focus - arc.center;
    if (!planar || norm(rel) >= arc.radius * (1.0 - 1e-12)) return;
    map_ = Map::Visual;
    auto visual = [&](double t) {
        const Point3 p = chart.point(t) - focus;
        return std::atan2(dot(p, arc.e2), dot(p, arc.e1));
    };
    if (periodic()) {
        // Seam opposite the boundary point nearest to the focus.
        const double c1 = dot(rel, arc.e1);
        const double c2 = dot(rel, arc.e2);
        u_lo_ = (c1 == 0.0 && c2 == 0.0) ? 0.0 : std::atan2(-c2, -c1);
        u_hi_ = u_lo_ + kTwoPi;
        return;
    }
    u_lo_ = visual(chart.t_lo());
    double sweep = wrap(visual(chart.t_hi()) - u_lo_);
    if (chart.t_hi() - chart.t_lo() >= kTwoPi * (1.0 - 1e-15)) sweep = kTwoPi;
    u_hi_ = u_lo_ + sweep;
}

double SearchFrame::normalize_angle(double t) const { return chart_->t_lo() + wrap(t - chart_->t_lo()); }

double SearchFrame::t_from_u(double u) const {
    switch (map_) {
    case Map::Identity: return u;
    case Map::Tan: return center_ + scale_ * std::tan(u);
    case Map::Visual: {
        const auto& arc = std::get<ArcGeometry>(chart_->geometry());
        const Point3 dir = std::cos(u) * arc.e1 + std::sin(u) * arc.e2;
        const Point3 rel = focus_ - arc.center;
        const double b = dot(rel, dir);
        const double c = dot(rel, rel) - arc.radius * arc.radius; // < 0: focus inside
        const double s = -b + std::sqrt(b * b - c);
        const Point3 p = rel + s * dir;
        return normalize_angle(std::atan2(dot(p, arc.e2), dot(p, arc.e1)));
    }
    }
    return u;
}

} // namespace barbilian::detail
