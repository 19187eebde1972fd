#include "barbilian/domain.hpp"

#include "barbilian/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <set>

namespace barbilian {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * kPi;
// Relative guard that keeps rounded images of circle charts out of J.
constexpr double kCircleGuard = 8.0 * std::numeric_limits<double>::epsilon();

void require_positive(double v, const char* name) {
    require(std::isfinite(v) && v > 0.0, std::string(name) + " must be a positive finite number");
}

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

} // namespace

std::string_view to_string(DomainKind kind) {
    switch (kind) {
    case DomainKind::HalfPlane: return "halfplane";
    case DomainKind::Disk: return "disk";
    case DomainKind::Quadrant: return "quadrant";
    case DomainKind::CircleMinusPoint: return "circle_minus_point";
    case DomainKind::ParallelPlanes: return "parallel_planes";
    case DomainKind::ConcentricSpheres: return "concentric_spheres";
    case DomainKind::Polyline: return "polyline";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// BoundaryChart

BoundaryChart BoundaryChart::line(LineGeometry g, double t_lo, double t_hi, EndKind lo, EndKind hi) {
    return BoundaryChart(g, t_lo, t_hi, lo, hi);
}

BoundaryChart BoundaryChart::arc(ArcGeometry g, double a_lo, double a_hi, EndKind lo, EndKind hi) {
    return BoundaryChart(g, a_lo, a_hi, lo, hi);
}

Point3 BoundaryChart::point(double t) const {
    if (const auto* l = std::get_if<LineGeometry>(&geom_)) return l->origin + t * l->step;
    const auto& a = std::get<ArcGeometry>(geom_);
    return a.center + a.radius * (std::cos(t) * a.e1 + std::sin(t) * a.e2);
}

bool BoundaryChart::compact() const {
    auto closed = [](EndKind e) { return e == EndKind::Closed || e == EndKind::Periodic; };
    return closed(lo_) && closed(hi_);
}

bool BoundaryChart::contains_parameter(double t) const {
    if (!std::isfinite(t)) return false;
    if (lo_ == EndKind::Periodic) return t >= t_lo_ && t < t_hi_;
    const bool lo_ok = lo_ == EndKind::Closed ? t >= t_lo_ : t > t_lo_;
    const bool hi_ok = hi_ == EndKind::Closed ? t <= t_hi_ : t < t_hi_;
    return lo_ok && hi_ok;
}

double BoundaryChart::u_lo() const {
    if (std::isinf(t_lo_)) return -kPi / 2.0;
    if (std::isinf(t_hi_)) return 0.0;
    return t_lo_;
}

double BoundaryChart::u_hi() const {
    if (std::isinf(t_hi_)) return kPi / 2.0;
    if (std::isinf(t_lo_)) return 0.0;
    return t_hi_;
}

double BoundaryChart::t_from_u(double u) const {
    const bool inf_lo = std::isinf(t_lo_);
    const bool inf_hi = std::isinf(t_hi_);
    if (inf_lo && inf_hi) return std::tan(u);
    if (inf_hi) return t_lo_ + std::tan(u);
    if (inf_lo) return t_hi_ + std::tan(u);
    return u;
}

double BoundaryChart::distance_to(Point3 p, Point3* nearest) const {
    Point3 foot;
    if (const auto* l = std::get_if<LineGeometry>(&geom_)) {
        const double len2 = dot(l->step, l->step);
        double t = len2 > 0.0 ? dot(p - l->origin, l->step) / len2 : 0.0;
        t = std::clamp(t, t_lo_, t_hi_);
        foot = l->origin + t * l->step;
    } else {
        const auto& a = std::get<ArcGeometry>(geom_);
        const Point3 rel = p - a.center;
        const double c1 = dot(rel, a.e1);
        const double c2 = dot(rel, a.e2);
        const double theta = (c1 == 0.0 && c2 == 0.0) ? t_lo_ : std::atan2(c2, c1);
        const double sweep = t_hi_ - t_lo_;
        const double offset = wrap_angle(theta - t_lo_);
        if (lo_ == EndKind::Periodic || sweep >= kTwoPi || offset <= sweep) {
            foot = point(t_lo_ + offset);
        } else {
            const Point3 p_lo = point(t_lo_);
            const Point3 p_hi = point(t_hi_);
            foot = distance(p, p_lo) <= distance(p, p_hi) ? p_lo : p_hi;
        }
    }
    if (nearest) *nearest = foot;
    return distance(p, foot);
}

Point3 SurfaceChart::point(double u, double v) const {
    if (shape == Shape::Plane) return {u, v, level};
    return {level * std::sin(v) * std::cos(u), level * std::sin(v) * std::sin(u), level * std::cos(v)};
}

// ---------------------------------------------------------------------------
// Domain factories

Domain Domain::half_plane() {
    Domain d;
    d.kind_ = DomainKind::HalfPlane;
    d.charts_.push_back(BoundaryChart::line({{0, 0, 0}, {1, 0, 0}}, -kInf, kInf, EndKind::Infinite, EndKind::Infinite));
    return d;
}

Domain Domain::disk(double rho) {
    require_positive(rho, "rho");
    Domain d;
    d.kind_ = DomainKind::Disk;
    d.rho_ = rho;
    d.charts_.push_back(
        BoundaryChart::arc({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, rho}, 0.0, kTwoPi, EndKind::Periodic, EndKind::Periodic));
    return d;
}

Domain Domain::quadrant() {
    Domain d;
    d.kind_ = DomainKind::Quadrant;
    d.charts_.push_back(BoundaryChart::line({{0, 0, 0}, {1, 0, 0}}, 0.0, kInf, EndKind::OpenFinite, EndKind::Infinite));
    d.charts_.push_back(BoundaryChart::line({{0, 0, 0}, {0, 1, 0}}, 0.0, kInf, EndKind::OpenFinite, EndKind::Infinite));
    return d;
}

Domain Domain::circle_minus_point(double rho, double l_angle) {
    require_positive(rho, "rho");
    require(std::isfinite(l_angle), "l_angle must be finite");
    Domain d;
    d.kind_ = DomainKind::CircleMinusPoint;
    d.rho_ = rho;
    d.l_angle_ = l_angle;
    d.charts_.push_back(BoundaryChart::arc({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, rho}, l_angle, l_angle + kTwoPi,
                                           EndKind::OpenFinite, EndKind::OpenFinite));
    return d;
}

Domain Domain::parallel_planes(double h) {
    require_positive(h, "h");
    Domain d;
    d.kind_ = DomainKind::ParallelPlanes;
    d.h_ = h;
    d.surface_ = SurfaceChart{SurfaceChart::Shape::Plane, h};
    return d;
}

Domain Domain::concentric_spheres(double r_k, double r_j) {
    require_positive(r_k, "r_k");
    require_positive(r_j, "r_j");
    Domain d;
    d.kind_ = DomainKind::ConcentricSpheres;
    d.r_k_ = r_k;
    d.r_j_ = r_j;
    d.surface_ = SurfaceChart{SurfaceChart::Shape::Sphere, r_k};
    return d;
}

Domain Domain::polyline(std::vector<PolylinePiece> pieces, bool compact, bool allow_degenerate) {
    require(!pieces.empty(), "polyline needs at least one piece");
    struct Ends {
        Point2 start;
        Point2 end;
    };
    std::vector<Ends> ends;
    for (const auto& piece : pieces) {
        if (const auto* s = std::get_if<PolylineSegment>(&piece)) {
            require(is_finite(s->from) && is_finite(s->to), "polyline vertices must be finite");
            require(allow_degenerate || distance(s->from, s->to) > 0.0, "degenerate polyline: zero-length segment");
            ends.push_back({s->from, s->to});
        } else {
            const auto& a = std::get<PolylineArc>(piece);
            require_positive(a.radius, "arc radius");
            require(std::isfinite(a.start) && std::isfinite(a.end), "arc angles must be finite");
            const double sweep = a.end - a.start;
            require(sweep > 0.0 && sweep <= kTwoPi, "arc sweep must lie in (0, 2*pi]");
            const Point2 c = a.center;
            ends.push_back({c + a.radius * Point2{std::cos(a.start), std::sin(a.start)},
                            c + a.radius * Point2{std::cos(a.end), std::sin(a.end)}});
        }
    }

    auto same = [](Point2 p, Point2 q) { return distance(p, q) <= 1e-12 * std::max(1.0, norm(p)); };
    auto shared = [&](Point2 p, std::size_t self) {
        for (std::size_t j = 0; j < ends.size(); ++j) {
            if (j == self) continue;
            if (same(p, ends[j].start) || same(p, ends[j].end)) return true;
        }
        return false;
    };

    Domain d;
    d.kind_ = DomainKind::Polyline;
    d.closed_polyline_ = same(ends.back().end, ends.front().start) &&
                         !(pieces.size() == 1 && std::holds_alternative<PolylineSegment>(pieces[0]));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        EndKind lo = EndKind::Closed;
        EndKind hi = EndKind::Closed;
        if (!compact) {
            if (!shared(ends[i].start, i)) lo = EndKind::OpenFinite;
            if (!shared(ends[i].end, i)) hi = EndKind::OpenFinite;
        }
        if (const auto* s = std::get_if<PolylineSegment>(&pieces[i])) {
            d.charts_.push_back(BoundaryChart::line({Point3(s->from), Point3(s->to - s->from)}, 0.0, 1.0, lo, hi));
        } else {
            const auto& a = std::get<PolylineArc>(pieces[i]);
            if (a.end - a.start >= kTwoPi) lo = hi = EndKind::Periodic;
            d.charts_.push_back(
                BoundaryChart::arc({Point3(a.center), {1, 0, 0}, {0, 1, 0}, a.radius}, a.start, a.end, lo, hi));
        }
    }
    return d;
}

Domain make_domain(DomainKind kind, const DomainParams& params) {
    switch (kind) {
    case DomainKind::HalfPlane: return Domain::half_plane();
    case DomainKind::Disk: return Domain::disk(params.rho);
    case DomainKind::Quadrant: return Domain::quadrant();
    case DomainKind::CircleMinusPoint: return Domain::circle_minus_point(params.rho, params.l_angle);
    case DomainKind::ParallelPlanes: return Domain::parallel_planes(params.h);
    case DomainKind::ConcentricSpheres: return Domain::concentric_spheres(params.r_k, params.r_j);
    case DomainKind::Polyline: return Domain::polyline(params.pieces, params.compact, params.allow_degenerate);
    }
    fail(ErrorCode::Usage, "unknown domain kind");
}

Point2 Domain::excluded_point() const {
    require(kind_ == DomainKind::CircleMinusPoint, "only circle_minus_point has an excluded point");
    return {rho_ * std::cos(l_angle_), rho_ * std::sin(l_angle_)};
}

// ---------------------------------------------------------------------------
// Membership and distances

bool Domain::contains(Point2 p) const {
    if (!is_finite(p)) return false;
    switch (kind_) {
    case DomainKind::HalfPlane: return p.y > 0.0;
    case DomainKind::Quadrant: return p.x > 0.0 && p.y > 0.0;
    case DomainKind::Disk:
    case DomainKind::CircleMinusPoint: return norm(p) < rho_ * (1.0 - kCircleGuard);
    case DomainKind::ParallelPlanes:
    case DomainKind::ConcentricSpheres: return contains(Point3(p));
    case DomainKind::Polyline: {
        const double scale = std::max(1.0, norm(p));
        if (distance_to_boundary(p) <= 1e-12 * scale) return false;
        if (!closed_polyline_) return true;
        // Winding number; arcs are swept in small sub-chords.
        double winding = 0.0;
        for (const auto& chart : charts_) {
            const int pieces = chart.is_line() ? 1 : 64;
            const double dt = (chart.t_hi() - chart.t_lo()) / pieces;
            for (int k = 0; k < pieces; ++k) {
                const Point2 a = chart.point(chart.t_lo() + k * dt).xy() - p;
                const Point2 b = chart.point(chart.t_lo() + (k + 1) * dt).xy() - p;
                winding += std::atan2(cross(a, b), dot(a, b));
            }
        }
        return std::abs(winding) > kPi;
    }
    }
    return false;
}

bool Domain::contains(Point3 p) const {
    if (!is_finite(p)) return false;
    switch (kind_) {
    case DomainKind::ParallelPlanes: return std::abs(p.z) <= 1e-12;
    case DomainKind::ConcentricSpheres: return std::abs(norm(p) - r_j_) <= 1e-9 * r_j_;
    default: return p.z == 0.0 && contains(p.xy());
    }
}

double Domain::distance_to_boundary(Point2 p, Point2* nearest) const {
    require(is_planar(), "distance_to_boundary needs a planar domain");
    double best = std::numeric_limits<double>::infinity();
    Point3 best_foot;
    for (const auto& chart : charts_) {
        Point3 foot;
        const double dist = chart.distance_to(Point3(p), &foot);
        if (dist < best) {
            best = dist;
            best_foot = foot;
        }
    }
    if (nearest) *nearest = best_foot.xy();
    return best;
}

std::vector<BoundaryChart> Domain::search_charts(Point3 a, Point3 b) const {
    if (is_planar()) return charts_;
    if (kind_ == DomainKind::ParallelPlanes) {
        Point3 dir = b - a;
        dir.z = 0.0;
        const double len = norm(dir);
        dir = len > 0.0 ? (1.0 / len) * dir : Point3{1, 0, 0};
        const Point3 origin{a.x, a.y, h_};
        return {BoundaryChart::line({origin, dir}, -kInf, kInf, EndKind::Infinite, EndKind::Infinite)};
    }
    // Great circle through the radial projections of a and b, scaled to the K sphere.
    const Point3 e1 = (1.0 / norm(a)) * a;
    Point3 bu = (1.0 / norm(b)) * b;
    Point3 e2 = bu - dot(bu, e1) * e1;
    if (norm(e2) < 1e-14) {
        const Point3 trial = std::abs(e1.x) < 0.9 ? Point3{1, 0, 0} : Point3{0, 1, 0};
        e2 = trial - dot(trial, e1) * e1;
    }
    e2 = (1.0 / norm(e2)) * e2;
    return {BoundaryChart::arc({{0, 0, 0}, e1, e2, r_k_}, 0.0, kTwoPi, EndKind::Periodic, EndKind::Periodic)};
}

Point3 boundary_point(const Domain& domain, std::size_t chart_index, double t) {
    require(chart_index < domain.charts().size(), "chart index out of range");
    const auto& chart = domain.charts()[chart_index];
    require(chart.contains_parameter(t), "t out of range for chart " + std::to_string(chart_index));
    return chart.point(t);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
        if (!ok.count(key)) fail(ErrorCode::Usage, "unknown key '" + key + "' in " + where);
    }
}

double number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) fail(ErrorCode::Usage, std::string("key '") + key + "' must be a number");
    return obj[key].get<double>();
}

Point2 point2(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(ErrorCode::Usage, std::string(what) + " must be an array [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

PolylinePiece piece_from_json(const json& v) {
    if (!v.is_object()) fail(ErrorCode::Usage, "polyline segment must be an object");
    if (v.contains("center")) {
        reject_unknown(v, {"center", "radius", "start", "end"}, "polyline arc");
        for (const char* key : {"radius", "start", "end"})
            if (!v.contains(key)) fail(ErrorCode::Usage, std::string("polyline arc needs '") + key + "'");
        return PolylineArc{point2(v["center"], "center"), number(v, "radius", 0), number(v, "start", 0),
                           number(v, "end", 0)};
    }
    reject_unknown(v, {"from", "to"}, "polyline segment");
    if (!v.contains("from") || !v.contains("to")) fail(ErrorCode::Usage, "polyline segment needs 'from' and 'to'");
    return PolylineSegment{point2(v["from"], "from"), point2(v["to"], "to")};
}

} // namespace

Domain domain_from_json(std::string_view json_text) {
    json obj;
    try {
        obj = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::Usage, std::string("invalid domain JSON: ") + e.what());
    }
    if (!obj.is_object() || !obj.contains("kind") || !obj["kind"].is_string())
        fail(ErrorCode::Usage, "domain JSON must be an object with a string 'kind'");
    const std::string kind = obj["kind"].get<std::string>();
    DomainParams p;
    if (kind == "halfplane") {
        reject_unknown(obj, {"kind"}, "halfplane");
        return make_domain(DomainKind::HalfPlane, p);
    }
    if (kind == "quadrant") {
        reject_unknown(obj, {"kind"}, "quadrant");
        return make_domain(DomainKind::Quadrant, p);
    }
    if (kind == "disk") {
        reject_unknown(obj, {"kind", "rho"}, "disk");
        p.rho = number(obj, "rho", 1.0);
        return make_domain(DomainKind::Disk, p);
    }
    if (kind == "circle_minus_point") {
        reject_unknown(obj, {"kind", "rho", "l_angle"}, "circle_minus_point");
        p.rho = number(obj, "rho", 1.0);
        p.l_angle = number(obj, "l_angle", 0.0);
        return make_domain(DomainKind::CircleMinusPoint, p);
    }
    if (kind == "parallel_planes") {
        reject_unknown(obj, {"kind", "h"}, "parallel_planes");
        p.h = number(obj, "h", 1.0);
        return make_domain(DomainKind::ParallelPlanes, p);
    }
    if (kind == "concentric_spheres") {
        reject_unknown(obj, {"kind", "r_k", "r_j"}, "concentric_spheres");
        p.r_k = number(obj, "r_k", 1.0);
        p.r_j = number(obj, "r_j", 2.0);
        return make_domain(DomainKind::ConcentricSpheres, p);
    }
    if (kind == "polyline") {
        reject_unknown(obj, {"kind", "segments", "compact"}, "polyline");
        if (!obj.contains("segments") || !obj["segments"].is_array())
            fail(ErrorCode::Usage, "polyline needs a 'segments' array");
        for (const auto& s : obj["segments"]) p.pieces.push_back(piece_from_json(s));
        if (obj.contains("compact")) {
            if (!obj["compact"].is_boolean()) fail(ErrorCode::Usage, "'compact' must be a boolean");
            p.compact = obj["compact"].get<bool>();
        }
        return make_domain(DomainKind::Polyline, p);
    }
    fail(ErrorCode::Usage, "unknown domain kind '" + kind + "'");
}

} // namespace barbilian
