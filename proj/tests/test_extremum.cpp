#include "barbilian/error.hpp"
#include "barbilian/extremum.hpp"
#include "barbilian/sampler.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

using namespace barbilian;

namespace {

const InfluenceSpec kEuclid{InfluenceKind::EuclideanDistance};

// Coarse n x n grid over a 2-D box, then compass search around the best cell.
double grid_then_compass(const std::function<double(double, double)>& f, double u0, double u1, double v0, double v1,
                         int n, bool maximize) {
    const double sign = maximize ? 1.0 : -1.0;
    double best = -INFINITY, bu = u0, bv = v0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double u = u0 + (u1 - u0) * (i + 0.5) / n;
            const double v = v0 + (v1 - v0) * (j + 0.5) / n;
            const double val = sign * f(u, v);
            if (val > best) best = val, bu = u, bv = v;
        }
    }
    double step = std::max(u1 - u0, v1 - v0) / n;
    while (step > 1e-10) {
        bool moved = false;
        for (auto [du, dv] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            const double val = sign * f(bu + du * step, bv + dv * step);
            if (val > best) {
                best = val, bu += du * step, bv += dv * step, moved = true;
                break;
            }
        }
        if (!moved) step *= 0.5;
    }
    return sign * best;
}

} // namespace

TEST(SupRatio, HalfPlaneLimitAtInfinity) {
    const Domain hp = make_domain(DomainKind::HalfPlane);
    const ExtremumResult r = sup_ratio(kEuclid, hp, {0, 1, 0}, {0, 2, 0});
    EXPECT_DOUBLE_EQ(r.value, 1.0);
    EXPECT_FALSE(r.attained);
    ASSERT_TRUE(r.arg_t.has_value());
    EXPECT_TRUE(std::isinf(*r.arg_t));
    EXPECT_FALSE(r.point.has_value());
}

TEST(SupRatio, DiskAttainedAtNearestBoundaryPoint) {
    const Domain disk = make_domain(DomainKind::Disk);
    const ExtremumResult r = sup_ratio(kEuclid, disk, {0, 0, 0}, {0.5, 0, 0});
    EXPECT_NEAR(r.value, 2.0, 1e-14);
    EXPECT_TRUE(r.attained);
    ASSERT_TRUE(r.point.has_value());
    EXPECT_NEAR(r.point->x, 1.0, 1e-12);
    EXPECT_NEAR(r.point->y, 0.0, 1e-6);
    EXPECT_GT(r.evaluations, 0);
}

TEST(SupRatio, IdenticalPointsGiveOne) {
    const Domain disk = make_domain(DomainKind::Disk);
    const ExtremumResult r = sup_ratio(kEuclid, disk, {0.3, 0.1, 0}, {0.3, 0.1, 0});
    EXPECT_EQ(r.value, 1.0);
    EXPECT_TRUE(r.attained);
    EXPECT_EQ(r.chart_index, 0u);
    EXPECT_EQ(inf_ratio(kEuclid, disk, {0.3, 0.1, 0}, {0.3, 0.1, 0}).value, 1.0);
}

TEST(InfRatio, Examples) {
    const ExtremumResult hp = inf_ratio(kEuclid, make_domain(DomainKind::HalfPlane), {0, 1, 0}, {0, 2, 0});
    EXPECT_NEAR(hp.value, 0.5, 1e-15);
    EXPECT_TRUE(hp.attained);
    EXPECT_NEAR(hp.point->x, 0.0, 1e-6);
    const ExtremumResult disk = inf_ratio(kEuclid, make_domain(DomainKind::Disk), {0, 0, 0}, {0.5, 0, 0});
    EXPECT_NEAR(disk.value, 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(disk.point->x, -1.0, 1e-12);
}

TEST(InfRatio, IsTheReciprocalOfTheSwappedSup) {
    for (DomainKind k : {DomainKind::HalfPlane, DomainKind::Disk, DomainKind::Quadrant, DomainKind::CircleMinusPoint}) {
        const Domain d = make_domain(k);
        JSampler s(d, 21);
        for (int i = 0; i < 20; ++i) {
            const auto [a, b] = s.next_pair();
            const double sup_ab = sup_ratio(kEuclid, d, a, b).value;
            const double inf_ba = inf_ratio(kEuclid, d, b, a).value;
            EXPECT_LE(std::abs(sup_ab * inf_ba - 1.0), 1e-15);
        }
    }
}

TEST(Extrema, BoundEveryBoundarySample) {
    for (DomainKind k : {DomainKind::HalfPlane, DomainKind::Disk, DomainKind::Quadrant}) {
        const Domain d = make_domain(k);
        JSampler s(d, 31);
        Rng rng(32);
        const auto [a, b] = s.next_pair();
        const double hi = sup_ratio(kEuclid, d, a, b).value;
        const double lo = inf_ratio(kEuclid, d, a, b).value;
        for (int i = 0; i < 1000; ++i) {
            const std::size_t ci = d.charts().size() == 1 ? 0 : static_cast<std::size_t>(rng.uniform() * 2);
            const BoundaryChart& c = d.charts()[ci];
            const double u = c.u_lo() + (c.u_hi() - c.u_lo()) * rng.uniform();
            if (!c.contains_parameter(c.t_from_u(u))) continue;
            const double g = ratio_g(kEuclid, d, c.point(c.t_from_u(u)), a, b);
            EXPECT_LE(g, hi * (1 + 1e-12));
            EXPECT_GE(g, lo * (1 - 1e-12));
        }
    }
}

TEST(Extrema, QuadrantNearTheCornerMatchesBruteForce) {
    const Domain q = make_domain(DomainKind::Quadrant);
    const Point3 a{1, 1, 0};
    const Point3 b{0.1, 0.1, 0};
    const BruteForceEstimate bf = brute_force_extrema(kEuclid, q, a, b, 100000);
    const ExtremumResult hi = sup_ratio(kEuclid, q, a, b);
    EXPECT_TRUE(hi.attained);
    EXPECT_GE(hi.log_value, bf.log_sup - 1e-15);
    EXPECT_NEAR(hi.log_value, bf.log_sup, 1e-8);
    EXPECT_NEAR(inf_ratio(kEuclid, q, a, b).log_value, bf.log_inf, 1e-8);
}

TEST(CircleMinusPoint, SupAtTheRemovedPointIsUnattained) {
    const Domain cmp = make_domain(DomainKind::CircleMinusPoint, {.rho = 1.0, .l_angle = 0.0});
    const ExtremumResult r = sup_ratio(kEuclid, cmp, {0, 0, 0}, {0.5, 0, 0});
    EXPECT_FALSE(r.attained);
    EXPECT_NEAR(r.value, 2.0, 1e-15);
    const ExtremumResult full = sup_ratio(kEuclid, make_domain(DomainKind::Disk), {0, 0, 0}, {0.5, 0, 0});
    EXPECT_NEAR(r.value, full.value, 1e-12);
}

TEST(BruteForce, AgreesWithRefinedSearch) {
    const Domain disk = make_domain(DomainKind::Disk);
    const BruteForceEstimate bf = brute_force_extrema(kEuclid, disk, {0, 0, 0}, {0.5, 0, 0}, 100000);
    EXPECT_NEAR(bf.sup, 2.0, 1e-8);
    EXPECT_NEAR(bf.inf, 2.0 / 3.0, 1e-8);
    const BruteForceEstimate hp =
        brute_force_extrema(kEuclid, make_domain(DomainKind::HalfPlane), {0, 1, 0}, {0, 2, 0}, 100000);
    EXPECT_DOUBLE_EQ(hp.sup, 1.0);
    EXPECT_NEAR(hp.inf, 0.5, 1e-8);
}

TEST(BruteForce, ImprovesWithDensity) {
    const Domain disk = make_domain(DomainKind::Disk);
    const Point3 a{0.2, -0.4, 0};
    const Point3 b{-0.3, 0.6, 0};
    const double sup = sup_ratio(kEuclid, disk, a, b).log_value;
    const double inf = inf_ratio(kEuclid, disk, a, b).log_value;
    const BruteForceEstimate coarse = brute_force_extrema(kEuclid, disk, a, b, 8);
    const BruteForceEstimate fine = brute_force_extrema(kEuclid, disk, a, b, 4096);
    EXPECT_LE(std::abs(fine.log_sup - sup), std::abs(coarse.log_sup - sup));
    EXPECT_LE(std::abs(fine.log_inf - inf), std::abs(coarse.log_inf - inf));
    EXPECT_LE(fine.log_sup, sup + 1e-15);
    EXPECT_GE(fine.log_inf, inf - 1e-15);
}

TEST(BruteForce, IdenticalPoints) {
    const BruteForceEstimate bf =
        brute_force_extrema(kEuclid, make_domain(DomainKind::Disk), {0.1, 0, 0}, {0.1, 0, 0}, 16);
    EXPECT_EQ(bf.sup, 1.0);
    EXPECT_EQ(bf.inf, 1.0);
    EXPECT_THROW(brute_force_extrema(kEuclid, make_domain(DomainKind::Disk), {0, 0, 0}, {0.1, 0, 0}, 1), Error);
}

TEST(SearchOptions, Validation) {
    const Domain disk = make_domain(DomainKind::Disk);
    auto code = [&](SearchOptions o) {
        try {
            sup_ratio(kEuclid, disk, {0, 0, 0}, {0.5, 0, 0}, o);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Internal;
    };
    EXPECT_EQ(code({.grid_points_per_chart = 8}), ErrorCode::Usage);
    EXPECT_EQ(code({.refine_tol = 0.0}), ErrorCode::Usage);
    EXPECT_EQ(code({.refine_tol = 1e-12, .max_refine_iters = 2}), ErrorCode::Convergence);
}

TEST(SearchOptions, PointsOutsideJAreRejected) {
    const Domain disk = make_domain(DomainKind::Disk);
    EXPECT_THROW(sup_ratio(kEuclid, disk, {2, 0, 0}, {0, 0, 0}), Error);
    EXPECT_THROW(sup_ratio(kEuclid, disk, {1, 0, 0}, {0, 0, 0}), Error);
}

TEST(Extrema, DeterministicAcrossCalls) {
    const Domain q = make_domain(DomainKind::Quadrant);
    const ExtremumResult r1 = sup_ratio(kEuclid, q, {0.7, 2.1, 0}, {1.9, 0.4, 0});
    const ExtremumResult r2 = sup_ratio(kEuclid, q, {0.7, 2.1, 0}, {1.9, 0.4, 0});
    EXPECT_EQ(r1.value, r2.value);
    EXPECT_EQ(r1.arg_t, r2.arg_t);
    EXPECT_EQ(r1.chart_index, r2.chart_index);
}

TEST(ThreeDimensional, ReducedLineMatchesPlaneGrid) {
    const double h = 1.0;
    const Domain planes = make_domain(DomainKind::ParallelPlanes, {.h = h});
    const InfluenceSpec spec{InfluenceKind::ExpHalfProjected};
    JSampler s(planes, 41);
    for (int i = 0; i < 5; ++i) {
        const auto [a, b] = s.next_pair();
        auto f = [&](double u, double v) { return log_ratio(spec, planes, {u, v, h}, a, b); };
        const double span = 3.0 * distance(a, b) + 1.0;
        const double cx = 0.5 * (a.x + b.x);
        const double cy = 0.5 * (a.y + b.y);
        const double hi = grid_then_compass(f, cx - span, cx + span, cy - span, cy + span, 64, true);
        const double lo = grid_then_compass(f, cx - span, cx + span, cy - span, cy + span, 64, false);
        EXPECT_NEAR(sup_ratio(spec, planes, a, b).log_value, hi, 1e-4);
        EXPECT_NEAR(inf_ratio(spec, planes, a, b).log_value, lo, 1e-4);
    }
}

TEST(ThreeDimensional, ReducedGreatCircleMatchesSphereGrid) {
    const Domain sph = make_domain(DomainKind::ConcentricSpheres, {.r_k = 1.0, .r_j = 2.0});
    const InfluenceSpec spec{InfluenceKind::ExpHalfSpherical};
    const SurfaceChart& k = *sph.surface();
    JSampler s(sph, 42);
    for (int i = 0; i < 5; ++i) {
        const auto [a, b] = s.next_pair();
        auto f = [&](double u, double v) { return log_ratio(spec, sph, k.point(u, v), a, b); };
        const double hi = grid_then_compass(f, 0, 2 * kPi, 0, kPi, 64, true);
        const double lo = grid_then_compass(f, 0, 2 * kPi, 0, kPi, 64, false);
        EXPECT_NEAR(sup_ratio(spec, sph, a, b).log_value, hi, 1e-4);
        EXPECT_NEAR(inf_ratio(spec, sph, a, b).log_value, lo, 1e-4);
    }
}
