#pragma once

#include "barbilian/geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace barbilian {

enum class DomainKind {
    HalfPlane,
    Disk,
    Quadrant,
    CircleMinusPoint,
    ParallelPlanes,
    ConcentricSpheres,
    Polyline,
};

std::string_view to_string(DomainKind kind);

/// How a chart behaves at one end of its parameter interval.
enum class EndKind {
    Closed,     // endpoint belongs to K
    OpenFinite, // endpoint is a finite point excluded from K; g there is a limit candidate
    Infinite,   // chart runs off to infinity
    Periodic,   // chart closes on itself (full circle)
};

/// point(t) = origin + t * step
struct LineGeometry {
    Point3 origin;
    Point3 step;
};

/// point(a) = center + radius * (cos a * e1 + sin a * e2)
struct ArcGeometry {
    Point3 center;
    Point3 e1;
    Point3 e2;
    double radius = 1.0;
};

/// One parametrized piece of the boundary set K.
class BoundaryChart {
public:
    static BoundaryChart line(LineGeometry g, double t_lo, double t_hi, EndKind lo, EndKind hi);
    static BoundaryChart arc(ArcGeometry g, double a_lo, double a_hi, EndKind lo, EndKind hi);

    Point3 point(double t) const;
    double t_lo() const { return t_lo_; }
    double t_hi() const { return t_hi_; }
    EndKind lo_end() const { return lo_; }
    EndKind hi_end() const { return hi_; }
    bool compact() const;
    bool contains_parameter(double t) const;

    const std::variant<LineGeometry, ArcGeometry>& geometry() const { return geom_; }
    bool is_line() const { return std::holds_alternative<LineGeometry>(geom_); }

    // Canonical compactified parameter u: tan substitution for infinite ends,
    // identity for compact charts.
    double u_lo() const;
    double u_hi() const;
    double t_from_u(double u) const;

    /// Distance from p to the closure of the chart image; `nearest` receives the foot point.
    double distance_to(Point3 p, Point3* nearest = nullptr) const;

private:
    BoundaryChart(std::variant<LineGeometry, ArcGeometry> g, double lo, double hi, EndKind lo_end, EndKind hi_end)
        : geom_(g), t_lo_(lo), t_hi_(hi), lo_(lo_end), hi_(hi_end) {}

    std::variant<LineGeometry, ArcGeometry> geom_;
    double t_lo_;
    double t_hi_;
    EndKind lo_;
    EndKind hi_;
};

/// Two-parameter chart of a 3-D boundary surface (plane z = h or sphere of radius r_K).
struct SurfaceChart {
    enum class Shape { Plane, Sphere } shape = Shape::Plane;
    double level = 0.0; // plane height or sphere radius
    Point3 point(double u, double v) const;
};

struct PolylineSegment {
    Point2 from;
    Point2 to;
};

struct PolylineArc {
    Point2 center;
    double radius = 1.0;
    double start = 0.0; // radians, counter-clockwise to `end`
    double end = 0.0;
};

using PolylinePiece = std::variant<PolylineSegment, PolylineArc>;

struct DomainParams {
    double rho = 1.0;
    double l_angle = 0.0;
    double h = 1.0;
    double r_k = 1.0;
    double r_j = 2.0;
    std::vector<PolylinePiece> pieces;
    bool compact = true;
    bool allow_degenerate = false; // single-point boundaries for effectiveness tests only
};

/// The pair (K, J): parametrized boundary set and admissible region.
class Domain {
public:
    static Domain half_plane();
    static Domain disk(double rho);
    static Domain quadrant();
    static Domain circle_minus_point(double rho, double l_angle);
    static Domain parallel_planes(double h);
    static Domain concentric_spheres(double r_k, double r_j);
    static Domain polyline(std::vector<PolylinePiece> pieces, bool compact, bool allow_degenerate = false);

    DomainKind kind() const { return kind_; }
    bool is_planar() const { return kind_ != DomainKind::ParallelPlanes && kind_ != DomainKind::ConcentricSpheres; }

    const std::vector<BoundaryChart>& charts() const { return charts_; }
    const std::optional<SurfaceChart>& surface() const { return surface_; }

    double rho() const { return rho_; }
    double l_angle() const { return l_angle_; }
    double plane_gap() const { return h_; }
    double r_k() const { return r_k_; }
    double r_j() const { return r_j_; }
    /// Point L removed from the circle (CircleMinusPoint only).
    Point2 excluded_point() const;

    bool contains(Point2 p) const;
    bool contains(Point3 p) const;

    /// Distance to K for planar domains (closure of K); `nearest` receives the foot point.
    double distance_to_boundary(Point2 p, Point2* nearest = nullptr) const;

    /// The 1-D search locus used for extremum searches between a and b. Planar domains
    /// return their charts; 3-D domains return the symmetry-reduced line or great circle.
    std::vector<BoundaryChart> search_charts(Point3 a, Point3 b) const;

private:
    Domain() = default;

    DomainKind kind_ = DomainKind::HalfPlane;
    std::vector<BoundaryChart> charts_;
    std::optional<SurfaceChart> surface_;
    double rho_ = 0.0;
    double l_angle_ = 0.0;
    double h_ = 0.0;
    double r_k_ = 0.0;
    double r_j_ = 0.0;
    bool closed_polyline_ = false;
};

Domain make_domain(DomainKind kind, const DomainParams& params = {});
Point3 boundary_point(const Domain& domain, std::size_t chart_index, double t);

/// Parses {"kind": ..., ...}; unknown keys are rejected.
Domain domain_from_json(std::string_view json_text);

} // namespace barbilian
