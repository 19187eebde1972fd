#include "barbilian/extremum.hpp"

#include "barbilian/error.hpp"
#include "search_frame.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace barbilian {

void SearchOptions::validate() const {
    if (grid_points_per_chart < 16) fail(ErrorCode::Usage, "grid_points_per_chart must be >= 16");
    if (!(refine_tol > 0.0)) fail(ErrorCode::Usage, "refine_tol must be > 0");
    if (max_refine_iters < 1) fail(ErrorCode::Usage, "max_refine_iters must be >= 1");
}

namespace {

using detail::SearchFrame;

struct Candidate {
    double log_value = -std::numeric_limits<double>::infinity();
    std::size_t chart = 0;
    double t = 0.0;
    std::optional<Point3> point;
    bool attained = false;
};

// Larger value wins; ties go to the smaller chart index, then the smaller parameter.
bool better(const Candidate& a, const Candidate& b) {
    if (a.log_value != b.log_value) return a.log_value > b.log_value;
    if (a.chart != b.chart) return a.chart < b.chart;
    return a.t < b.t;
}

class RatioProbe {
public:
    RatioProbe(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b, double sign)
        : spec_(spec), domain_(domain), a_(a), b_(b), sign_(sign) {}

    // sign * log g_AB at a chart point; sign = -1 turns minimisation into maximisation.
    double at(Point3 p) {
        ++evaluations;
        return sign_ * log_ratio(spec_, domain_, p, a_, b_);
    }

    // Candidate for a chart end; nullopt for periodic ends.
    std::optional<Candidate> end_candidate(const BoundaryChart& chart, std::size_t index, bool upper) {
        const EndKind kind = upper ? chart.hi_end() : chart.lo_end();
        const double t = upper ? chart.t_hi() : chart.t_lo();
        Candidate c;
        c.chart = index;
        c.t = t;
        switch (kind) {
        case EndKind::Periodic: return std::nullopt;
        case EndKind::Closed:
        case EndKind::OpenFinite: {
            const Point3 p = chart.point(t);
            c.log_value = at(p);
            c.point = p;
            c.attained = kind == EndKind::Closed;
            return c;
        }
        case EndKind::Infinite: {
            const auto& line = std::get<LineGeometry>(chart.geometry());
            const Point3 dir = upper ? line.step : -1.0 * line.step;
            c.log_value = sign_ * log_ratio_at_infinity(spec_, domain_, a_, b_, dir);
            c.attained = false;
            return c;
        }
        }
        return std::nullopt;
    }

    std::int64_t evaluations = 0;

private:
    const InfluenceSpec& spec_;
    const Domain& domain_;
    Point3 a_;
    Point3 b_;
    double sign_;
};

struct GridScan {
    std::vector<double> u;
    std::vector<double> v;
    std::optional<Candidate> lo_end;
    std::optional<Candidate> hi_end;
};

// Uniform grid over the frame. Non-periodic grids include both ends, whose values are the
// end candidates (limits for open ends); periodic grids omit the duplicate seam point.
GridScan scan(const SearchFrame& frame, std::size_t chart_index, RatioProbe& probe, int n) {
    GridScan g;
    const bool periodic = frame.periodic();
    const double span = frame.u_hi() - frame.u_lo();
    const double step = periodic ? span / n : span / (n - 1);
    g.u.resize(n);
    g.v.resize(n);
    for (int i = 0; i < n; ++i) g.u[i] = frame.u_lo() + i * step;
    if (!periodic) {
        g.u[n - 1] = frame.u_hi();
        g.lo_end = probe.end_candidate(frame.chart(), chart_index, false);
        g.hi_end = probe.end_candidate(frame.chart(), chart_index, true);
        g.v[0] = g.lo_end->log_value;
        g.v[n - 1] = g.hi_end->log_value;
    }
    const int first = periodic ? 0 : 1;
    const int last = periodic ? n : n - 1;
    for (int i = first; i < last; ++i) g.v[i] = probe.at(frame.point(g.u[i]));
    return g;
}

// Golden-section maximisation of probe on (lo, hi), seeded with a known interior value.
Candidate golden_refine(const SearchFrame& frame, std::size_t chart_index, RatioProbe& probe, double lo, double hi,
                        double seed_u, double seed_v, const SearchOptions& opts) {
    constexpr double inv_phi = 0.6180339887498948482;
    double best_u = seed_u;
    double best_v = seed_v;
    auto eval = [&](double u) {
        const double v = probe.at(frame.point(u));
        if (v > best_v) best_v = v, best_u = u;
        return v;
    };

    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = eval(c);
    double fd = eval(d);
    int iter = 0;
    while ((hi - lo) > opts.refine_tol * std::max(1.0, std::abs(0.5 * (lo + hi)))) {
        if (++iter > opts.max_refine_iters) {
            fail(ErrorCode::Convergence, "extremum refinement did not converge within max_refine_iters");
        }
        if (fc >= fd) {
            hi = d, d = c, fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = eval(c);
        } else {
            lo = c, c = d, fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = eval(d);
        }
    }
    Candidate out;
    out.log_value = best_v;
    out.chart = chart_index;
    out.t = frame.t_from_u(best_u);
    out.point = frame.point(best_u);
    out.attained = true;
    return out;
}

void validate_pair(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b) {
    check_compatible(spec, domain);
    require(domain.contains(a), "point A is not in J");
    require(domain.contains(b), "point B is not in J");
}

ExtremumResult to_result(const Candidate& c, std::int64_t evaluations) {
    ExtremumResult r;
    r.log_value = c.log_value;
    r.value = std::exp(c.log_value);
    r.chart_index = c.chart;
    r.arg_t = c.t;
    r.point = c.point;
    r.attained = c.attained;
    r.evaluations = evaluations;
    return r;
}

ExtremumResult trivial_result(const Domain& domain, Point3 a) {
    const auto charts = domain.search_charts(a, a);
    const auto& chart = charts.front();
    const double t = chart.t_from_u(0.5 * (chart.u_lo() + chart.u_hi()));
    ExtremumResult r;
    r.chart_index = 0;
    r.arg_t = t;
    r.point = chart.point(t);
    r.attained = true;
    return r;
}

} // namespace

ExtremumResult sup_ratio(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b,
                         const SearchOptions& opts) {
    opts.validate();
    validate_pair(spec, domain, a, b);
    if (a == b) return trivial_result(domain, a);

    const auto charts = domain.search_charts(a, b);
    RatioProbe probe(spec, domain, a, b, 1.0);
    Candidate best;
    auto offer = [&](const Candidate& c) {
        if (better(c, best)) best = c;
    };

    const int n = opts.grid_points_per_chart;
    for (std::size_t ci = 0; ci < charts.size(); ++ci) {
        const SearchFrame frame(charts[ci], b, domain.is_planar());
        const GridScan g = scan(frame, ci, probe, n);
        const bool periodic = frame.periodic();
        if (g.lo_end) offer(*g.lo_end);
        if (g.hi_end) offer(*g.hi_end);

        auto value = [&](int i) { return g.v[(i + n) % n]; };
        const double step = g.u[1] - g.u[0];
        const int first = periodic ? 0 : 1;
        const int last = periodic ? n : n - 1;
        for (int i = first; i < last; ++i) {
            // Plateaus are entered once, at their first point.
            if (!(g.v[i] > value(i - 1) && g.v[i] >= value(i + 1))) continue;
            offer(golden_refine(frame, ci, probe, g.u[i] - step, g.u[i] + step, g.u[i], g.v[i], opts));
        }
        if (!periodic) {
            // A closed end can hide an interior maximum in its first grid cell.
            if (charts[ci].lo_end() == EndKind::Closed && g.v[0] >= g.v[1])
                offer(golden_refine(frame, ci, probe, g.u[0], g.u[1], g.u[1], g.v[1], opts));
            if (charts[ci].hi_end() == EndKind::Closed && g.v[n - 1] >= g.v[n - 2])
                offer(golden_refine(frame, ci, probe, g.u[n - 2], g.u[n - 1], g.u[n - 2], g.v[n - 2], opts));
        }
    }
    return to_result(best, probe.evaluations);
}

ExtremumResult inf_ratio(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b,
                         const SearchOptions& opts) {
    ExtremumResult r = sup_ratio(spec, domain, b, a, opts);
    r.value = 1.0 / r.value;
    r.log_value = -r.log_value;
    return r;
}

BruteForceEstimate brute_force_extrema(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b,
                                       int n_samples) {
    require(n_samples >= 2, "brute_force_extrema needs n_samples >= 2");
    validate_pair(spec, domain, a, b);
    BruteForceEstimate out;
    if (a == b) return out;

    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    const auto charts = domain.search_charts(a, b);
    RatioProbe probe(spec, domain, a, b, 1.0);
    for (std::size_t ci = 0; ci < charts.size(); ++ci) {
        // The maximum of g_AB sits where f(., B) is small, the minimum where f(., A) is.
        const SearchFrame toward_b(charts[ci], b, domain.is_planar());
        for (double v : scan(toward_b, ci, probe, n_samples).v) hi = std::max(hi, v);
        const SearchFrame toward_a(charts[ci], a, domain.is_planar());
        for (double v : scan(toward_a, ci, probe, n_samples).v) lo = std::min(lo, v);
    }
    out.log_sup = hi;
    out.log_inf = lo;
    out.sup = std::exp(hi);
    out.inf = std::exp(lo);
    return out;
}

} // namespace barbilian
