#include "barbilian/barbilian.h"

#include "barbilian/distance.hpp"
#include "barbilian/error.hpp"
#include "barbilian/lagrange.hpp"
#include "barbilian/metric.hpp"

#include <array>
#include <exception>
#include <new>
#include <string>

struct bb_domain {
    barbilian::Domain domain;
};

namespace {

using namespace barbilian;

thread_local std::string last_error;

template <class Fn>
bb_status guarded(Fn&& fn) {
    try {
        fn();
        return BB_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return static_cast<bb_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown error";
    }
    return BB_ERR_INTERNAL;
}

void require_arg(const void* p, const char* name) {
    if (!p) fail(ErrorCode::Usage, std::string(name) + " must not be NULL");
}

InfluenceSpec to_spec(bb_influence influence, const Domain& domain) {
    switch (influence) {
    case BB_INFLUENCE_DEFAULT: return default_influence(domain);
    case BB_INFLUENCE_EUCLIDEAN: return {InfluenceKind::EuclideanDistance};
    case BB_INFLUENCE_EXP_PROJECTED: return {InfluenceKind::ExpHalfProjected};
    case BB_INFLUENCE_EXP_SPHERICAL: return {InfluenceKind::ExpHalfSpherical};
    }
    fail(ErrorCode::Usage, "unknown influence");
}

SearchOptions to_options(const bb_search_options* opts) {
    SearchOptions o;
    if (opts) {
        o.grid_points_per_chart = opts->grid_points_per_chart;
        o.refine_tol = opts->refine_tol;
        o.max_refine_iters = opts->max_refine_iters;
    }
    return o;
}

MetricMode to_mode(bb_metric_mode mode) {
    switch (mode) {
    case BB_METRIC_AUTO: return MetricMode::Auto;
    case BB_METRIC_CLOSED_FORM: return MetricMode::ClosedForm;
    case BB_METRIC_NUMERIC: return MetricMode::Numeric;
    }
    fail(ErrorCode::Usage, "unknown metric mode");
}

Point3 to_point(bb_point p) { return {p.x, p.y, p.z}; }
bb_point from_point(Point3 p) { return {p.x, p.y, p.z}; }
bb_point2 from_point(Point2 p) { return {p.x, p.y}; }

bb_extremum from_extremum(const ExtremumResult& r) {
    bb_extremum e{};
    e.value = r.value;
    e.log_value = r.log_value;
    e.attained = r.attained ? 1 : 0;
    e.chart_index = r.chart_index ? static_cast<int32_t>(*r.chart_index) : -1;
    e.arg_t = r.arg_t.value_or(0.0);
    e.has_point = r.point ? 1 : 0;
    if (r.point) e.point = from_point(*r.point);
    e.evaluations = r.evaluations;
    return e;
}

} // namespace

extern "C" {

const char* bb_version(void) { return "1.0.0"; }

const char* bb_last_error(void) { return last_error.c_str(); }

void bb_search_options_default(bb_search_options* opts) {
    if (!opts) return;
    const SearchOptions d;
    opts->grid_points_per_chart = d.grid_points_per_chart;
    opts->refine_tol = d.refine_tol;
    opts->max_refine_iters = d.max_refine_iters;
}

bb_status bb_influence_from_name(const char* name, bb_influence* out) {
    return guarded([&] {
        require_arg(name, "name");
        require_arg(out, "out");
        switch (influence_from_name(name).kind) {
        case InfluenceKind::EuclideanDistance: *out = BB_INFLUENCE_EUCLIDEAN; break;
        case InfluenceKind::ExpHalfProjected: *out = BB_INFLUENCE_EXP_PROJECTED; break;
        case InfluenceKind::ExpHalfSpherical: *out = BB_INFLUENCE_EXP_SPHERICAL; break;
        }
    });
}

bb_status bb_domain_from_json(const char* json, bb_domain** out) {
    return guarded([&] {
        require_arg(json, "json");
        require_arg(out, "out");
        *out = nullptr;
        *out = new bb_domain{domain_from_json(json)};
    });
}

void bb_domain_free(bb_domain* domain) { delete domain; }

const char* bb_domain_kind(const bb_domain* domain) {
    if (!domain) return "";
    return to_string(domain->domain.kind()).data();
}

int bb_domain_is_planar(const bb_domain* domain) { return domain && domain->domain.is_planar() ? 1 : 0; }

bb_status bb_domain_contains(const bb_domain* domain, bb_point p, int* inside) {
    return guarded([&] {
        require_arg(domain, "domain");
        require_arg(inside, "inside");
        *inside = domain->domain.contains(to_point(p)) ? 1 : 0;
    });
}

bb_status bb_distance(const bb_domain* domain, bb_influence influence, bb_point a, bb_point b,
                      const bb_search_options* opts, bb_distance_result* out) {
    return guarded([&] {
        require_arg(domain, "domain");
        require_arg(out, "out");
        const Domain& d = domain->domain;
        const DistanceResult r = barbilian_distance(to_spec(influence, d), d, to_point(a), to_point(b), to_options(opts));
        out->distance = r.distance;
        out->sup = from_extremum(r.sup);
        out->inf = from_extremum(r.inf);
    });
}

bb_status bb_check_axioms(const bb_domain* domain, bb_influence influence, int64_t n_triples, uint64_t seed,
                          int allow_near_boundary, const bb_search_options* opts, bb_axiom_report* out) {
    return guarded([&] {
        require_arg(domain, "domain");
        require_arg(out, "out");
        const Domain& d = domain->domain;
        SamplerOptions sampler;
        sampler.allow_near_boundary = allow_near_boundary != 0;
        const AxiomReport r = check_axioms(to_spec(influence, d), d, n_triples, seed, to_options(opts), sampler);
        out->n_samples = r.n_samples;
        out->max_symmetry_violation = r.max_symmetry_violation;
        out->max_triangle_violation = r.max_triangle_violation;
        out->max_identity_violation = r.max_identity_violation;
        for (std::size_t i = 0; i < 3; ++i) out->worst_triple[i] = from_point(r.worst_triple[i]);
    });
}

bb_status bb_tangent_circles_at(const bb_domain* domain, bb_point2 at, bb_point2 direction, bb_metric_mode mode,
                                bb_tangent_circles* out) {
    return guarded([&] {
        require_arg(domain, "domain");
        require_arg(out, "out");
        const Domain& d = domain->domain;
        const Point2 a{at.x, at.y};
        const Direction2 dir{direction.x, direction.y};
        TangentCircles tc;
        switch (to_mode(mode)) {
        case MetricMode::Auto: tc = tangent_circles(d, a, dir); break;
        case MetricMode::Numeric: tc = tangent_circles_numeric(d, a, dir); break;
        case MetricMode::ClosedForm:
            require(d.contains(a), "point is not in J");
            if (d.kind() == DomainKind::HalfPlane) tc = tangent_circles_halfplane(a, dir);
            else if (d.kind() == DomainKind::Disk || d.kind() == DomainKind::CircleMinusPoint)
                tc = tangent_circles_disk(d.rho(), a, dir);
            else if (d.kind() == DomainKind::Quadrant) tc = tangent_circles_quadrant(a, dir);
            else fail(ErrorCode::Precondition, "no closed form for this domain");
            break;
        }
        *out = bb_tangent_circles{};
        out->r_plus = tc.R_plus;
        out->r_minus = tc.R_minus;
        out->has_plus = tc.center_plus ? 1 : 0;
        out->has_minus = tc.center_minus ? 1 : 0;
        if (tc.center_plus) out->center_plus = from_point(*tc.center_plus);
        if (tc.center_minus) out->center_minus = from_point(*tc.center_minus);
        if (tc.tangency_plus) out->tangency_plus = from_point(*tc.tangency_plus);
        if (tc.tangency_minus) out->tangency_minus = from_point(*tc.tangency_minus);
    });
}

bb_status bb_metric_at(const bb_domain* domain, bb_point2 at, bb_point2 direction, bb_metric_mode mode,
                       bb_metric_sample* out) {
    return guarded([&] {
        require_arg(domain, "domain");
        require_arg(out, "out");
        const MetricSample s =
            metric_tensor(domain->domain, {at.x, at.y}, Direction2{direction.x, direction.y}, to_mode(mode));
        out->point = from_point(s.point);
        out->dx = s.direction.dx();
        out->dy = s.direction.dy();
        out->r_plus = s.R;
        out->r_minus = s.r;
        out->lambda = s.lambda;
        out->g11 = s.g11;
        out->g12 = s.g12;
        out->g22 = s.g22;
        out->det_g = s.det_g;
    });
}

bb_status bb_curvature_at(const bb_domain* domain, bb_point2 at, double step_h, bb_curvature_sample* out) {
    return guarded([&] {
        require_arg(domain, "domain");
        require_arg(out, "out");
        std::optional<double> h;
        if (step_h > 0.0) h = step_h;
        const CurvatureSample s = gaussian_curvature(domain->domain, {at.x, at.y}, h);
        out->point = from_point(s.point);
        out->step_h = s.step_h;
        out->kappa = s.kappa;
    });
}

bb_status bb_lagrange_check(bb_point2 at, bb_point2 direction, double step_h, bb_lagrange_report* out) {
    return guarded([&] {
        require_arg(out, "out");
        const Point2 a{at.x, at.y};
        const Direction2 v{direction.x, direction.y};
        std::optional<double> h;
        if (step_h > 0.0) h = step_h;
        const CartanSample s = cartan_asymmetry(a, v, h);
        constexpr std::array<double, 3> scales{2.0, 10.0, 0.1};
        out->step_h = s.step_h;
        out->dg11_dydot = s.dg11_dydot;
        out->dg12_dxdot = s.dg12_dxdot;
        out->symmetric = s.symmetric ? 1 : 0;
        out->homogeneity_deviation = check_homogeneity(a, v, scales);
        out->positive_definite = check_positive_definite(a, v) ? 1 : 0;
    });
}

} // extern "C"
