#pragma once

#include "barbilian/domain.hpp"
#include "barbilian/sampler.hpp"

#include <optional>
#include <string_view>
#include <utility>

namespace barbilian {

enum class InfluenceKind {
    EuclideanDistance, // f(P, A) = |PA|
    ExpHalfProjected,  // f(M, A) = exp(|M'A| / 2), M' the orthogonal projection of M onto the J plane
    ExpHalfSpherical,  // f(M, A) = exp((M'A) / 2), M' the radial projection onto the J sphere
};

struct InfluenceSpec {
    InfluenceKind kind = InfluenceKind::EuclideanDistance;
};

std::string_view to_string(InfluenceKind kind);
InfluenceSpec influence_from_name(std::string_view name);
/// {"influence": "euclidean" | "exp_projected" | "exp_spherical"}
InfluenceSpec influence_from_json(std::string_view json_text);
/// The influence each built-in configuration is defined with.
InfluenceSpec default_influence(const Domain& domain);
/// Throws a precondition error when spec and domain do not belong together.
void check_compatible(const InfluenceSpec& spec, const Domain& domain);

// All evaluation routines work in log space: log f and log g_AB.

double log_influence(const InfluenceSpec& spec, const Domain& domain, Point3 p, Point3 a);
double influence_eval(const InfluenceSpec& spec, const Domain& domain, Point3 p, Point3 a);

/// log g_AB(P) = log f(P, A) - log f(P, B)
double log_ratio(const InfluenceSpec& spec, const Domain& domain, Point3 p, Point3 a, Point3 b);
double ratio_g(const InfluenceSpec& spec, const Domain& domain, Point3 p, Point3 a, Point3 b);

/// Limit of log g_AB(P) as P runs to infinity along the unit vector `direction`.
double log_ratio_at_infinity(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b, Point3 direction);

struct EffectivenessReport {
    bool effective = true;
    std::optional<std::pair<Point3, Point3>> witness; // pair with (near-)constant ratio
    double min_variation = 0.0;                        // smallest max-min spread of g over the sampled pairs
};

/// Sampled necessary check: false when some sampled pair A != B has g_AB varying by
/// less than `tol` over `n_boundary_samples` points of every chart.
EffectivenessReport is_effective(const InfluenceSpec& spec, const Domain& domain, JSampler& pairs, int n_pairs,
                                 int n_boundary_samples, double tol);

} // namespace barbilian
