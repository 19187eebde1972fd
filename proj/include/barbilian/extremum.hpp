#pragma once

#include "barbilian/domain.hpp"
#include "barbilian/influence.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace barbilian {

struct SearchOptions {
    int grid_points_per_chart = 4096;
    double refine_tol = 1e-12;
    int max_refine_iters = 200;

    /// Throws a usage error unless grid >= 16, tol > 0 and iters >= 1.
    void validate() const;
};

/// sup or inf of g_AB over K.
///
/// When the winner is a limit at an open chart end, `attained` is false; `arg_t` then holds
/// the end's parameter (possibly +-inf) and `point` is set only for finite ends.
struct ExtremumResult {
    double value = 1.0;
    double log_value = 0.0;
    std::optional<std::size_t> chart_index;
    std::optional<double> arg_t;
    std::optional<Point3> point;
    bool attained = false;
    std::int64_t evaluations = 0;
};

ExtremumResult sup_ratio(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b,
                         const SearchOptions& opts = {});

/// 1 / sup_ratio(b, a), with the argument data of that search.
ExtremumResult inf_ratio(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b,
                         const SearchOptions& opts = {});

struct BruteForceEstimate {
    double sup = 1.0;
    double inf = 1.0;
    double log_sup = 0.0;
    double log_inf = 0.0;
};

/// Plain max/min of g_AB over `n_samples` uniform points per chart in the compactified search
/// parameters, plus the open-end limits. No refinement; a differential-testing oracle.
BruteForceEstimate brute_force_extrema(const InfluenceSpec& spec, const Domain& domain, Point3 a, Point3 b,
                                       int n_samples);

} // namespace barbilian
