#pragma once

#include "barbilian/domain.hpp"

namespace barbilian::detail {

/// Compactified parametrization of one chart as seen from a focus point F.
///
/// Lines use t = t_F + s * tan(u), where t_F is the foot of F on the line and s the
/// distance of F in parameter units, so u is the angle under which F sees the boundary
/// point. Planar circles with F inside use the same visual angle. Everything else keeps
/// the chart parameter. Near-boundary foci get resolution where g_AB varies fastest.
class SearchFrame {
public:
    SearchFrame(const BoundaryChart& chart, Point3 focus, bool planar);

    double u_lo() const { return u_lo_; }
    double u_hi() const { return u_hi_; }
    bool periodic() const { return chart_->lo_end() == EndKind::Periodic; }
    double t_from_u(double u) const;
    Point3 point(double u) const { return chart_->point(t_from_u(u)); }
    const BoundaryChart& chart() const { return *chart_; }

private:
    enum class Map { Identity, Tan, Visual };

    double normalize_angle(double t) const;

    const BoundaryChart* chart_;
    Map map_ = Map::Identity;
    double u_lo_ = 0.0;
    double u_hi_ = 0.0;
    double center_ = 0.0; // Tan: t_F
    double scale_ = 1.0;  // Tan: s
    Point3 focus_;        // Visual
};

} // namespace barbilian::detail
