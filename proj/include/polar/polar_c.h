/*
 * C interface to the polar-analytic function toolkit.
 *
 * Every fallible call returns a polar_status. On failure a message is kept
 * per thread and can be read with polar_last_error() until the next call on
 * the same thread. Objects are opaque handles released with their *_free
 * function; strings returned through char** are released with
 * polar_string_free(). Angles are in radians, points are (r, theta) with
 * r > 0, complex numbers are {re, im}.
 */
#ifndef POLAR_C_H
#define POLAR_C_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(POLAR_BUILDING_LIBRARY)
#define POLAR_API __attribute__((visibility("default")))
#else
#define POLAR_API
#endif

typedef enum polar_status {
    POLAR_OK = 0,
    POLAR_E_PARSE = 1,
    POLAR_E_UNKNOWN_IDENTIFIER = 2,
    POLAR_E_DOMAIN = 3,
    POLAR_E_DIVISION_BY_ZERO = 4,
    POLAR_E_LOG_OF_ZERO = 5,
    POLAR_E_NON_FINITE = 6,
    POLAR_E_NON_DIFFERENTIABLE = 7,
    POLAR_E_INVALID_CURVE = 8,
    POLAR_E_ENDPOINT_MISMATCH = 9,
    POLAR_E_TOLERANCE = 10,
    POLAR_E_NOT_ANALYTIC = 11,
    POLAR_E_VANISHING_DERIVATIVE = 12,
    POLAR_E_TANGENT_UNDEFINED = 13,
    POLAR_E_EMPTY_BOUNDARY = 14,
    POLAR_E_INVALID_ARGUMENT = 15,
    POLAR_E_INTERNAL = 16
} polar_status;

typedef struct polar_complex {
    double re;
    double im;
} polar_complex;

typedef struct polar_point {
    double r;
    double theta;
} polar_point;

typedef struct polar_rect {
    double r_min;
    double r_max;
    double theta_min;
    double theta_max;
} polar_rect;

typedef struct polar_expr polar_expr;
typedef struct polar_cr_scan polar_cr_scan;
typedef struct polar_taylor polar_taylor;
typedef struct polar_curve polar_curve;
typedef struct polar_morera polar_morera;
typedef struct polar_net polar_net;

/* ---- library ------------------------------------------------------------ */

POLAR_API const char* polar_version(void);
POLAR_API const char* polar_status_string(polar_status status);
POLAR_API const char* polar_last_error(void);
/* Byte offset of the most recent parse error on this thread. */
POLAR_API size_t polar_last_error_offset(void);
POLAR_API const char* polar_grammar_help(void);
POLAR_API void polar_string_free(char* s);

/* ---- expressions -------------------------------------------------------- */

POLAR_API polar_status polar_expr_parse(const char* source, polar_expr** out);
/* One-variable mode; `variable` may be NULL for "x". */
POLAR_API polar_status polar_expr_parse_univariate(const char* source, const char* variable,
                                                   polar_expr** out);
POLAR_API void polar_expr_free(polar_expr* e);
POLAR_API polar_status polar_expr_print(const polar_expr* e, char** out);
POLAR_API int polar_expr_equal(const polar_expr* a, const polar_expr* b);
POLAR_API polar_status polar_eval(const polar_expr* e, polar_point p, polar_complex* out);
POLAR_API polar_status polar_eval_x(const polar_expr* e, double x, polar_complex* out);

/* ---- differentiation ---------------------------------------------------- */

typedef struct polar_dual {
    polar_complex val;
    polar_complex dr;
    polar_complex dtheta;
} polar_dual;

typedef struct polar_derivative_report {
    polar_complex value;
    polar_complex dpol_via_r;
    polar_complex dpol_via_theta;
    polar_complex cr_residual;
    polar_point point;
} polar_derivative_report;

POLAR_API polar_status polar_eval_dual(const polar_expr* e, polar_point p, polar_dual* out);
POLAR_API polar_status polar_dpol(const polar_expr* e, polar_point p, polar_complex* out);
POLAR_API polar_status polar_derivative(const polar_expr* e, polar_point p,
                                        polar_derivative_report* out);
POLAR_API polar_status polar_cr_residual(const polar_expr* e, polar_point p, polar_complex* out);

typedef struct polar_cr_summary {
    double max_residual;
    int has_argmax;
    polar_point argmax;
    double max_scaled_residual;
    size_t evaluated;
    size_t failures;
    int analytic;
} polar_cr_summary;

/* tolerance <= 0 selects the default 1e-8. */
POLAR_API polar_status polar_check_cr_grid(const polar_expr* e, polar_rect region, int n_r,
                                           int n_theta, double tolerance, polar_cr_scan** out);
POLAR_API void polar_cr_scan_free(polar_cr_scan* scan);
POLAR_API void polar_cr_scan_summary(const polar_cr_scan* scan, polar_cr_summary* out);
POLAR_API polar_status polar_cr_scan_failure(const polar_cr_scan* scan, size_t index,
                                             polar_point* point, const char** message);

/* ---- polar-disks and Taylor expansions ---------------------------------- */

/* Writes m boundary points into out[0..m). */
POLAR_API polar_status polar_disk_boundary(polar_point center, double rho, size_t m,
                                           polar_point* out);
POLAR_API polar_status polar_disk_log_distance(polar_point center, polar_point p, double* out);
POLAR_API polar_status polar_disk_svg(polar_point center, double rho, size_t m, char** out);

/* Boundary made of n_components polylines stored back to back in `vertices`;
 * component k has component_sizes[k] vertices and is closed when closed[k] != 0
 * (closed may be NULL). */
POLAR_API polar_status polar_max_radius(polar_point center, const polar_point* vertices,
                                        const size_t* component_sizes, const int* closed,
                                        size_t n_components, double* out);

POLAR_API int polar_default_sample_count(int order);
/* samples == 0 selects the default count. */
POLAR_API polar_status polar_taylor_create(const polar_expr* e, polar_point center, int order,
                                           double sample_radius, int samples,
                                           polar_taylor** out);
POLAR_API void polar_taylor_free(polar_taylor* t);
POLAR_API int polar_taylor_order(const polar_taylor* t);
POLAR_API polar_status polar_taylor_coefficient(const polar_taylor* t, int k, polar_complex* out);
POLAR_API void polar_taylor_info(const polar_taylor* t, double* sample_radius, int* sample_count,
                                 double* tail_estimate);
POLAR_API polar_status polar_taylor_eval(const polar_taylor* t, polar_point p, polar_complex* out);
POLAR_API polar_status polar_taylor_to_json(const polar_taylor* t, char** out);
POLAR_API polar_status polar_sin_alternative_expansion(polar_point p, int order,
                                                       polar_complex* out);

/* ---- curves and line integrals ------------------------------------------ */

POLAR_API polar_status polar_curve_parse(const char* source, polar_curve** out);
POLAR_API polar_status polar_curve_rect(polar_rect rect, polar_curve** out);
POLAR_API polar_status polar_curve_reverse(const polar_curve* c, polar_curve** out);
POLAR_API polar_status polar_curve_concat(const polar_curve* a, const polar_curve* b,
                                          polar_curve** out);
POLAR_API void polar_curve_free(polar_curve* c);
POLAR_API void polar_curve_endpoints(const polar_curve* c, polar_point* start, polar_point* end);
POLAR_API int polar_curve_is_closed(const polar_curve* c);
POLAR_API size_t polar_curve_piece_count(const polar_curve* c);
POLAR_API double polar_curve_length(const polar_curve* c);
POLAR_API size_t polar_curve_warning_count(const polar_curve* c);
POLAR_API const char* polar_curve_warning(const polar_curve* c, size_t index);
POLAR_API polar_status polar_curve_describe(const polar_curve* c, char** out);
/* Samples every piece at `per_piece` equispaced parameters. Needs capacity for
 * pieces * per_piece points; *count receives the number written. */
POLAR_API polar_status polar_curve_sample(const polar_curve* c, int per_piece, polar_point* out,
                                          size_t capacity, size_t* count);

typedef struct polar_integral {
    polar_complex value;
    double error_estimate;
    size_t evaluations;
} polar_integral;

/* max_evaluations == 0 selects the default budget of 1e6. On POLAR_E_TOLERANCE
 * `out` still receives the best value and estimate. */
POLAR_API polar_status polar_line_integral(const polar_expr* e, const polar_curve* c, double tol,
                                           size_t max_evaluations, polar_integral* out);

typedef struct polar_path_report {
    polar_integral first;
    polar_integral second;
    double difference;
    int pass;
} polar_path_report;

POLAR_API polar_status polar_path_check(const polar_expr* e, const polar_curve* first,
                                        const polar_curve* second, double tol,
                                        polar_path_report* out);

typedef struct polar_morera_summary {
    double max_abs;
    int has_argmax;
    polar_rect argmax;
    int argmax_i;
    int argmax_j;
    double scale;
    int consistent;
    size_t evaluated;
    size_t skipped;
} polar_morera_summary;

POLAR_API polar_status polar_morera_scan(const polar_expr* e, polar_rect region, int m, int n,
                                         double tol, polar_morera** out);
POLAR_API void polar_morera_free(polar_morera* scan);
POLAR_API void polar_morera_get_summary(const polar_morera* scan, polar_morera_summary* out);
POLAR_API polar_status polar_morera_skipped(const polar_morera* scan, size_t index, int* i, int* j,
                                            const char** message);

/* ---- angle geometry ----------------------------------------------------- */

typedef struct polar_jacobian {
    double a11, a12, a21, a22;
} polar_jacobian;

POLAR_API polar_status polar_jacobian_at(const polar_expr* e, polar_point p, polar_jacobian* out);
POLAR_API polar_status polar_angle_alpha(double phi1, double phi2, double* out);
POLAR_API polar_status polar_angle_beta(double r0, double phi1, double phi2, double* out);
POLAR_API polar_status polar_cos_beta(double r0, double phi1, double phi2, double* out);
POLAR_API polar_status polar_angle_beta_jacobian(const polar_expr* e, polar_point p, double phi1,
                                                 double phi2, double* out);

typedef enum polar_beta_kind { POLAR_BETA_INCREASING = 0, POLAR_BETA_MIN_AT = 1 } polar_beta_kind;

typedef struct polar_beta_profile {
    polar_beta_kind kind;
    double t1;
    double t2;
    int has_r0_star;
    double r0_star;
    double beta_limit_at_zero;
    double beta_limit_at_infinity;
    int constant;
} polar_beta_profile;

POLAR_API polar_status polar_beta_profile_tangents(double t1, double t2, polar_beta_profile* out);
POLAR_API polar_status polar_beta_profile_angles(double phi1, double phi2,
                                                 polar_beta_profile* out);
POLAR_API polar_status polar_cos_beta_slope_sign(double r0, double t1, double t2, int* out);

typedef struct polar_net_curve_info {
    const char* id;
    int family; /* 0: r = value, 1: theta = value */
    double value;
    size_t points;
    int truncated;
    const char* truncation_reason; /* NULL unless truncated */
} polar_net_curve_info;

typedef struct polar_net_intersection {
    polar_point point;
    size_t r_line;
    size_t theta_line;
    polar_complex image;
    polar_complex tangent_r_line;
    polar_complex tangent_theta_line;
    double normalized_inner;
    double det_j;
    int dpol_vanishes;
    const char* error; /* NULL when the intersection evaluated cleanly */
} polar_net_intersection;

POLAR_API polar_status polar_net_create(const polar_expr* e, const double* r_values, size_t n_r,
                                        const double* theta_values, size_t n_theta, int samples,
                                        polar_net** out);
POLAR_API void polar_net_free(polar_net* net);
POLAR_API size_t polar_net_curve_count(const polar_net* net);
POLAR_API polar_status polar_net_curve(const polar_net* net, size_t index,
                                       polar_net_curve_info* out);
POLAR_API polar_status polar_net_curve_point(const polar_net* net, size_t index, size_t k,
                                             double* t, polar_complex* w);
POLAR_API size_t polar_net_intersection_count(const polar_net* net);
POLAR_API polar_status polar_net_intersection_at(const polar_net* net, size_t index,
                                                 polar_net_intersection* out);
POLAR_API double polar_net_max_abs_inner(const polar_net* net);
POLAR_API polar_status polar_net_to_csv(const polar_net* net, char** out);
POLAR_API polar_status polar_net_to_svg(const polar_net* net, char** out);

/* ---- Mellin derivatives ------------------------------------------------- */

POLAR_API polar_status polar_mellin_derivative(const polar_expr* phi, double c, double x,
                                               polar_complex* out);
POLAR_API polar_status polar_mellin_polar_derivative(const polar_expr* e, double c, polar_point p,
                                                     polar_complex* out);
POLAR_API polar_status polar_iterated_theta0(const polar_expr* e, polar_point p, int k,
                                             polar_complex* out);

#ifdef __cplusplus
}
#endif

#endif /* POLAR_C_H */
