#include "barbilian/influence.hpp"

#include "barbilian/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>

namespace barbilian {

std::string_view to_string(InfluenceKind kind) {
    switch (kind) {
    case InfluenceKind::EuclideanDistance: return "euclidean";
    case InfluenceKind::ExpHalfProjected: return "exp_projected";
    case InfluenceKind::ExpHalfSpherical: return "exp_spherical";
    }
    return "unknown";
}

InfluenceSpec influence_from_name(std::string_view name) {
    if (name == "euclidean") return {InfluenceKind::EuclideanDistance};
    if (name == "exp_projected") return {InfluenceKind::ExpHalfProjected};
    if (name == "exp_spherical") return {InfluenceKind::ExpHalfSpherical};
    fail(ErrorCode::Usage, "unknown influence '" + std::string(name) + "'");
}

InfluenceSpec influence_from_json(std::string_view json_text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::Usage, std::string("invalid influence JSON: ") + e.what());
    }
    if (!obj.is_object() || obj.size() != 1 || !obj.contains("influence") || !obj["influence"].is_string())
        fail(ErrorCode::Usage, "influence JSON must be {\"influence\": <name>}");
    return influence_from_name(obj["influence"].get<std::string>());
}

InfluenceSpec default_influence(const Domain& domain) {
    switch (domain.kind()) {
    case DomainKind::ParallelPlanes: return {InfluenceKind::ExpHalfProjected};
    case DomainKind::ConcentricSpheres: return {InfluenceKind::ExpHalfSpherical};
    default: return {InfluenceKind::EuclideanDistance};
    }
}

void check_compatible(const InfluenceSpec& spec, const Domain& domain) {
    const bool ok = [&] {
        switch (spec.kind) {
        case InfluenceKind::EuclideanDistance: return domain.is_planar();
        case InfluenceKind::ExpHalfProjected: return domain.kind() == DomainKind::ParallelPlanes;
        case InfluenceKind::ExpHalfSpherical: return domain.kind() == DomainKind::ConcentricSpheres;
        }
        return false;
    }();
    if (!ok) {
        fail(ErrorCode::Precondition, "influence '" + std::string(to_string(spec.kind)) +
                                          "' does not apply to domain '" + std::string(to_string(domain.kind())) +
                                          "'");
    }
}

double log_influence(const InfluenceSpec& spec, const Domain& domain, Point3 p, Point3 a) {
    switch (spec.kind) {
    case InfluenceKind::EuclideanDistance: {
        const double d = distance(p, a);
        require(d > 0.0, "influence undefined: boundary point coincides with the interior point");
        return std::log(d);
    }
    case InfluenceKind::ExpHalfProjected: {
        const Point3 projected{p.x, p.y, 0.0};
        return 0.5 * distance(projected, a);
    }
    case InfluenceKind::ExpHalfSpherical: {
        const double arc = domain.r_j() * angle_between(p, a);
        return 0.5 * arc;
    }
    }
    fail(ErrorCode::Internal, "unhandled influence kind");
}

double influence_eval(const InfluenceSpec& spec, const Domain& domain, Point3 p, Point3 a) {
    check_compatible(spec, domain);
    const double value = std::exp(log_influence(spec, domain, p, a));
    if (!(value > 0.0)) fail(ErrorCode::Internal, "influence evaluated to a non-positive value");
    return value;
}

double log_ratio(const InfluenceSpec& spec, const Domain& domain, Point3 p, Point3 a, Point3 b) {
    if (spec.kind == InfluenceKind::EuclideanDistance) {
        // One log of the squared-distance quotient instead of two logs; the quotient is
        // always taken >= 1 so that swapping A and B negates the result exactly.
        const Point3 pa = p - a;
        const Point3 pb = p - b;
        const double qa = dot(pa, pa);
        const double qb = dot(pb, pb);
        require(qa > 0.0 && qb > 0.0, "influence undefined: boundary point coincides with the interior point");
        return qa >= qb ? 0.5 * std::log(qa / qb) : -0.5 * std::log(qb / qa);
    }
    return log_influence(spec, domain, p, a) - log_influence(spec, domain, p, b);
}

double ratio_g(const InfluenceSpec& spec, const Domain& domain, Point3 p, Point3 a, Point3 b) {
    check_compatible(spec, domain);
    if (spec.kind == InfluenceKind::EuclideanDistance) return distance(p, a) / distance(p, b);
    return std::exp(log_ratio(spec, domain, p, a, b));
}

double log_ratio_at_infinity(const InfluenceSpec& spec, const Domain&, Point3 a, Point3 b, Point3 direction) {
    switch (spec.kind) {
    case InfluenceKind::EuclideanDistance: return 0.0;
    case InfluenceKind::ExpHalfProjected: {
        // |M'A| - |M'B| -> (B - A) . e along M' = X + t e.
        Point3 e{direction.x, direction.y, 0.0};
        const double len = norm(e);
        if (len == 0.0) fail(ErrorCode::Internal, "vertical direction has no projected limit");
        return 0.5 * dot(b - a, (1.0 / len) * e);
    }
    case InfluenceKind::ExpHalfSpherical: break;
    }
    fail(ErrorCode::Internal, "spherical influence has no limit at infinity");
}

EffectivenessReport is_effective(const InfluenceSpec& spec, const Domain& domain, JSampler& pairs, int n_pairs,
                                 int n_boundary_samples, double tol) {
    require(n_pairs >= 1, "is_effective needs n_pairs >= 1");
    require(n_boundary_samples >= 2, "is_effective needs n_boundary_samples >= 2");
    check_compatible(spec, domain);

    std::vector<Point3> samples;
    if (domain.is_planar()) {
        for (const auto& chart : domain.charts()) {
            const double lo = chart.u_lo();
            const double hi = chart.u_hi();
            for (int i = 0; i < n_boundary_samples; ++i) {
                const double u = lo + (hi - lo) * (i + 0.5) / n_boundary_samples;
                samples.push_back(chart.point(chart.t_from_u(u)));
            }
        }
    } else {
        const auto& surface = *domain.surface();
        const int side = std::max(2, static_cast<int>(std::ceil(std::sqrt(n_boundary_samples))));
        for (int i = 0; i < side; ++i) {
            for (int j = 0; j < side; ++j) {
                const double s = (i + 0.5) / side;
                const double t = (j + 0.5) / side;
                if (surface.shape == SurfaceChart::Shape::Plane)
                    samples.push_back(surface.point(std::tan(kPi * (s - 0.5)), std::tan(kPi * (t - 0.5))));
                else
                    samples.push_back(surface.point(2.0 * kPi * s, kPi * t));
            }
        }
    }

    EffectivenessReport report;
    report.min_variation = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_pairs; ++k) {
        const auto [a, b] = pairs.next_pair();
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const Point3& p : samples) {
            const double g = ratio_g(spec, domain, p, a, b);
            lo = std::min(lo, g);
            hi = std::max(hi, g);
        }
        const double variation = hi - lo;
        if (variation < report.min_variation) report.min_variation = variation;
        if (variation < tol && report.effective) {
            report.effective = false;
            report.witness = std::make_pair(a, b);
        }
    }
    return report;
}

} // namespace barbilian
