#pragma once

#include "barbilian/extremum.hpp"

#include <array>
#include <cstdint>

namespace barbilian {

struct DistanceResult {
    double distance = 0.0;
    ExtremumResult sup;
    ExtremumResult inf;
};

/// d(A, B) = ln sup g_AB - ln inf g_AB = ln sup g_AB + ln sup g_BA.
///
/// Both terms come from sup searches, so d(A, B) and d(B, A) add the same two numbers and
/// symmetry holds exactly. On non-compact charts the sup may be an unattained limit.
DistanceResult barbilian_distance(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b,
                                  const SearchOptions& opts = {});

inline DistanceResult barbilian_distance(const InfluenceSpec& spec, const Domain& domain, Point2 a, Point2 b,
                                         const SearchOptions& opts = {}) {
    return barbilian_distance(spec, domain, Point3(a), Point3(b), opts);
}

struct SamplerOptions {
    bool allow_near_boundary = false;
    double near_boundary = 1e-3;
};

struct AxiomReport {
    std::int64_t n_samples = 0;
    double max_symmetry_violation = 0.0;
    double max_triangle_violation = 0.0;
    double max_identity_violation = 0.0;
    std::array<Point3, 3> worst_triple{};
};

/// Symmetry, triangle inequality and identity over `n_triples` seeded triples of J.
/// Triples are evaluated in parallel; the reduction is a fixed-order max-fold.
AxiomReport check_axioms(const InfluenceSpec& spec, const Domain& domain, std::int64_t n_triples,
                         std::uint64_t seed, const SearchOptions& opts = {}, const SamplerOptions& sampler = {});

struct PositivityReport {
    double min_distance = 0.0;
    std::array<Point3, 2> argmin_pair{};
    std::int64_t n_pairs = 0;
};

/// Minimum of d(A, B) over seeded distinct pairs with |A - B| >= min_separation.
PositivityReport positivity_check(const InfluenceSpec& spec, const Domain& domain, std::int64_t n_pairs,
                                  std::uint64_t seed, double min_separation = 0.0, const SearchOptions& opts = {},
                                  const SamplerOptions& sampler = {});

} // namespace barbilian
