/*
 * C interface to the barbilian library.
 *
 * Every call returns a bb_status; on failure bb_last_error() holds a message for the
 * calling thread until its next failing call. Domains are opaque, immutable handles and
 * may be shared across threads.
 */
#ifndef BARBILIAN_H
#define BARBILIAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BARBILIAN_BUILDING)
#    define BB_API __declspec(dllexport)
#  else
#    define BB_API __declspec(dllimport)
#  endif
#else
#  define BB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum bb_status {
    BB_OK = 0,
    BB_ERR_USAGE = 1,
    BB_ERR_PRECONDITION = 2,
    BB_ERR_CONVERGENCE = 3,
    BB_ERR_INTERNAL = 4
} bb_status;

typedef enum bb_influence {
    BB_INFLUENCE_DEFAULT = 0, /* the influence the domain is defined with */
    BB_INFLUENCE_EUCLIDEAN = 1,
    BB_INFLUENCE_EXP_PROJECTED = 2,
    BB_INFLUENCE_EXP_SPHERICAL = 3
} bb_influence;

typedef enum bb_metric_mode {
    BB_METRIC_AUTO = 0,
    BB_METRIC_CLOSED_FORM = 1,
    BB_METRIC_NUMERIC = 2
} bb_metric_mode;

typedef struct bb_domain bb_domain;

typedef struct bb_point {
    double x;
    double y;
    double z;
} bb_point;

typedef struct bb_point2 {
    double x;
    double y;
} bb_point2;

typedef struct bb_search_options {
    int32_t grid_points_per_chart;
    double refine_tol;
    int32_t max_refine_iters;
} bb_search_options;

typedef struct bb_extremum {
    double value;
    double log_value;
    int32_t attained;
    int32_t chart_index; /* -1 when absent */
    double arg_t;        /* may be +-inf for limits at infinity */
    int32_t has_point;
    bb_point point;
    int64_t evaluations;
} bb_extremum;

typedef struct bb_distance_result {
    double distance;
    bb_extremum sup;
    bb_extremum inf;
} bb_distance_result;

typedef struct bb_axiom_report {
    int64_t n_samples;
    double max_symmetry_violation;
    double max_triangle_violation;
    double max_identity_violation;
    bb_point worst_triple[3];
} bb_axiom_report;

/* Infinite radii are HUGE_VAL; the matching center and tangency point are then absent. */
typedef struct bb_tangent_circles {
    double r_plus;
    double r_minus;
    int32_t has_plus;
    int32_t has_minus;
    bb_point2 center_plus;
    bb_point2 center_minus;
    bb_point2 tangency_plus;
    bb_point2 tangency_minus;
} bb_tangent_circles;

typedef struct bb_metric_sample {
    bb_point2 point;
    double dx;
    double dy;
    double r_plus;
    double r_minus;
    double lambda;
    double g11;
    double g12;
    double g22;
    double det_g;
} bb_metric_sample;

typedef struct bb_curvature_sample {
    bb_point2 point;
    double step_h;
    double kappa;
} bb_curvature_sample;

typedef struct bb_lagrange_report {
    double step_h;
    double dg11_dydot;
    double dg12_dxdot;
    int32_t symmetric;
    double homogeneity_deviation; /* over velocity scales {2, 10, 0.1} */
    int32_t positive_definite;
} bb_lagrange_report;

BB_API const char* bb_version(void);
BB_API const char* bb_last_error(void);

BB_API void bb_search_options_default(bb_search_options* opts);
BB_API bb_status bb_influence_from_name(const char* name, bb_influence* out);

/* {"kind": "disk", "rho": 1.0}, {"kind": "quadrant"}, ...; unknown keys are rejected. */
BB_API bb_status bb_domain_from_json(const char* json, bb_domain** out);
BB_API void bb_domain_free(bb_domain* domain);
BB_API const char* bb_domain_kind(const bb_domain* domain);
BB_API int bb_domain_is_planar(const bb_domain* domain);
BB_API bb_status bb_domain_contains(const bb_domain* domain, bb_point p, int* inside);

/* opts may be NULL for defaults. */
BB_API bb_status bb_distance(const bb_domain* domain, bb_influence influence, bb_point a, bb_point b,
                             const bb_search_options* opts, bb_distance_result* out);

BB_API bb_status bb_check_axioms(const bb_domain* domain, bb_influence influence, int64_t n_triples,
                                 uint64_t seed, int allow_near_boundary, const bb_search_options* opts,
                                 bb_axiom_report* out);

BB_API bb_status bb_tangent_circles_at(const bb_domain* domain, bb_point2 at, bb_point2 direction,
                                       bb_metric_mode mode, bb_tangent_circles* out);

BB_API bb_status bb_metric_at(const bb_domain* domain, bb_point2 at, bb_point2 direction, bb_metric_mode mode,
                              bb_metric_sample* out);

/* step_h <= 0 selects the default 1e-3 * dist(at, K). */
BB_API bb_status bb_curvature_at(const bb_domain* domain, bb_point2 at, double step_h, bb_curvature_sample* out);

/* Quadrant generalized Lagrange metric checks; step_h <= 0 selects 1e-5 * |direction|. */
BB_API bb_status bb_lagrange_check(bb_point2 at, bb_point2 direction, double step_h, bb_lagrange_report* out);

#ifdef __cplusplus
}
#endif

#endif /* BARBILIAN_H */
