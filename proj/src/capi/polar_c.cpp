#include "polar/polar_c.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "polar/analysis.hpp"
#include "polar/contour.hpp"
#include "polar/diffcore.hpp"
#include "polar/geometry.hpp"
#include "polar/mellin.hpp"
#include "polar/plot.hpp"

struct polar_expr {
    polar::Expression e;
};

struct polar_cr_scan {
    polar::CrGridSummary s;
};

struct polar_taylor {
    polar::TaylorExpansion t;
};

struct polar_curve {
    polar::Curve c;
};

struct polar_morera {
    polar::MoreraReport m;
};

struct polar_net {
    polar::NetReport n;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_offset = 0;

polar_status map_code(polar::ErrorCode code) {
    using polar::ErrorCode;
    switch (code) {
    case ErrorCode::Parse: return POLAR_E_PARSE;
    case ErrorCode::UnknownIdentifier: return POLAR_E_UNKNOWN_IDENTIFIER;
    case ErrorCode::Domain: return POLAR_E_DOMAIN;
    case ErrorCode::DivisionByZero: return POLAR_E_DIVISION_BY_ZERO;
    case ErrorCode::LogOfZero: return POLAR_E_LOG_OF_ZERO;
    case ErrorCode::NonFinite: return POLAR_E_NON_FINITE;
    case ErrorCode::NonDifferentiable: return POLAR_E_NON_DIFFERENTIABLE;
    case ErrorCode::InvalidCurve: return POLAR_E_INVALID_CURVE;
    case ErrorCode::EndpointMismatch: return POLAR_E_ENDPOINT_MISMATCH;
    case ErrorCode::ToleranceNotReached: return POLAR_E_TOLERANCE;
    case ErrorCode::NotPolarAnalytic: return POLAR_E_NOT_ANALYTIC;
    case ErrorCode::VanishingDerivative: return POLAR_E_VANISHING_DERIVATIVE;
    case ErrorCode::TangentUndefined: return POLAR_E_TANGENT_UNDEFINED;
    case ErrorCode::EmptyBoundary: return POLAR_E_EMPTY_BOUNDARY;
    case ErrorCode::InvalidArgument: return POLAR_E_INVALID_ARGUMENT;
    }
    return POLAR_E_INTERNAL;
}

polar_status fail(polar_status s, std::string message) {
    g_last_error = std::move(message);
    return s;
}

template <class F>
polar_status guard(F&& fn) {
    g_last_error.clear();
    g_last_offset = 0;
    try {
        fn();
        return POLAR_OK;
    } catch (const polar::ParseError& e) {
        g_last_offset = e.offset();
        return fail(map_code(e.code()), e.what());
    } catch (const polar::Error& e) {
        return fail(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(POLAR_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(POLAR_E_INTERNAL, e.what());
    } catch (...) {
        return fail(POLAR_E_INTERNAL, "unknown failure");
    }
}

polar_status null_arg() { return fail(POLAR_E_INVALID_ARGUMENT, "null argument"); }

polar_complex to_c(polar::Complex z) { return {z.real(), z.imag()}; }
polar_point to_c(const polar::PolarPoint& p) { return {p.r(), p.theta()}; }
polar::PolarPoint from_c(polar_point p) { return polar::PolarPoint(p.r, p.theta); }
polar::Rect from_c(polar_rect r) { return {r.r_min, r.r_max, r.theta_min, r.theta_max}; }
polar_rect to_c(const polar::Rect& r) { return {r.r_min, r.r_max, r.theta_min, r.theta_max}; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

polar_beta_profile to_c(const polar::BetaProfile& b) {
    polar_beta_profile out{};
    out.kind = b.kind == polar::BetaProfile::Kind::Increasing ? POLAR_BETA_INCREASING
                                                              : POLAR_BETA_MIN_AT;
    out.t1 = b.t1;
    out.t2 = b.t2;
    out.has_r0_star = b.r0_star.has_value();
    out.r0_star = b.r0_star.value_or(0.0);
    out.beta_limit_at_zero = b.beta_limit_at_zero;
    out.beta_limit_at_infinity = b.beta_limit_at_infinity;
    out.constant = b.constant;
    return out;
}

polar_integral to_c(const polar::IntegralResult& r) {
    return {to_c(r.value), r.error_estimate, r.evaluations};
}

} // namespace

extern "C" {

const char* polar_version(void) { return "1.0.0"; }

const char* polar_status_string(polar_status status) {
    switch (status) {
    case POLAR_OK: return "ok";
    case POLAR_E_PARSE: return "parse error";
    case POLAR_E_UNKNOWN_IDENTIFIER: return "unknown identifier";
    case POLAR_E_DOMAIN: return "domain error";
    case POLAR_E_DIVISION_BY_ZERO: return "division by zero";
    case POLAR_E_LOG_OF_ZERO: return "log of zero";
    case POLAR_E_NON_FINITE: return "non-finite value";
    case POLAR_E_NON_DIFFERENTIABLE: return "non-differentiable";
    case POLAR_E_INVALID_CURVE: return "invalid curve";
    case POLAR_E_ENDPOINT_MISMATCH: return "endpoint mismatch";
    case POLAR_E_TOLERANCE: return "tolerance not reached";
    case POLAR_E_NOT_ANALYTIC: return "not polar-analytic";
    case POLAR_E_VANISHING_DERIVATIVE: return "vanishing derivative";
    case POLAR_E_TANGENT_UNDEFINED: return "tangent undefined";
    case POLAR_E_EMPTY_BOUNDARY: return "empty boundary";
    case POLAR_E_INVALID_ARGUMENT: return "invalid argument";
    case POLAR_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* polar_last_error(void) { return g_last_error.c_str(); }
size_t polar_last_error_offset(void) { return g_last_offset; }
const char* polar_grammar_help(void) { return polar::grammar_help(); }
void polar_string_free(char* s) { std::free(s); }

// ---- expressions

polar_status polar_expr_parse(const char* source, polar_expr** out) {
    if (!source || !out) return null_arg();
    return guard([&] { *out = new polar_expr{polar::parse(source)}; });
}

polar_status polar_expr_parse_univariate(const char* source, const char* variable,
                                         polar_expr** out) {
    if (!source || !out) return null_arg();
    return guard([&] {
        *out = new polar_expr{polar::parse_univariate(source, variable ? variable : "x")};
    });
}

void polar_expr_free(polar_expr* e) { delete e; }

polar_status polar_expr_print(const polar_expr* e, char** out) {
    if (!e || !out) return null_arg();
    return guard([&] { *out = dup_string(polar::print(e->e)); });
}

int polar_expr_equal(const polar_expr* a, const polar_expr* b) {
    if (!a || !b) return 0;
    return a->e == b->e;
}

polar_status polar_eval(const polar_expr* e, polar_point p, polar_complex* out) {
    if (!e || !out) return null_arg();
    return guard([&] { *out = to_c(polar::eval(e->e, from_c(p))); });
}

polar_status polar_eval_x(const polar_expr* e, double x, polar_complex* out) {
    if (!e || !out) return null_arg();
    return guard([&] { *out = to_c(polar::eval_at(e->e, x)); });
}

// ---- differentiation

polar_status polar_eval_dual(const polar_expr* e, polar_point p, polar_dual* out) {
    if (!e || !out) return null_arg();
    return guard([&] {
        const polar::Dual1 d = polar::eval_dual(e->e, from_c(p));
        *out = {to_c(d.val), to_c(d.dr), to_c(d.dtheta)};
    });
}

polar_status polar_dpol(const polar_expr* e, polar_point p, polar_complex* out) {
    if (!e || !out) return null_arg();
    return guard([&] { *out = to_c(polar::dpol(e->e, from_c(p))); });
}

polar_status polar_derivative(const polar_expr* e, polar_point p, polar_derivative_report* out) {
    if (!e || !out) return null_arg();
    return guard([&] {
        const polar::DerivativeReport r = polar::derivative_report(e->e, from_c(p));
        *out = {to_c(r.value), to_c(r.dpol_via_r), to_c(r.dpol_via_theta), to_c(r.cr_residual),
                to_c(r.point)};
    });
}

polar_status polar_cr_residual(const polar_expr* e, polar_point p, polar_complex* out) {
    if (!e || !out) return null_arg();
    return guard([&] { *out = to_c(polar::cr_residual(e->e, from_c(p))); });
}

polar_status polar_check_cr_grid(const polar_expr* e, polar_rect region, int n_r, int n_theta,
                                 double tolerance, polar_cr_scan** out) {
    if (!e || !out) return null_arg();
    return guard([&] {
        const double tol = tolerance > 0.0 ? tolerance : polar::kAnalyticTolerance;
        *out = new polar_cr_scan{polar::check_cr_grid(e->e, from_c(region), n_r, n_theta, tol)};
    });
}

void polar_cr_scan_free(polar_cr_scan* scan) { delete scan; }

void polar_cr_scan_summary(const polar_cr_scan* scan, polar_cr_summary* out) {
    if (!scan || !out) return;
    const auto& s = scan->s;
    out->max_residual = s.max_residual;
    out->has_argmax = s.argmax.has_value();
    out->argmax = s.argmax ? to_c(*s.argmax) : polar_point{0.0, 0.0};
    out->max_scaled_residual = s.max_scaled_residual;
    out->evaluated = s.evaluated;
    out->failures = s.failures.size();
    out->analytic = s.analytic;
}

polar_status polar_cr_scan_failure(const polar_cr_scan* scan, size_t index, polar_point* point,
                                   const char** message) {
    if (!scan) return null_arg();
    if (index >= scan->s.failures.size())
        return fail(POLAR_E_INVALID_ARGUMENT, "failure index out of range");
    const auto& f = scan->s.failures[index];
    if (point) *point = to_c(f.point);
    if (message) *message = f.message.c_str();
    return POLAR_OK;
}

// ---- disks and Taylor expansions

polar_status polar_disk_boundary(polar_point center, double rho, size_t m, polar_point* out) {
    if (!out) return null_arg();
    return guard([&] {
        const polar::PolarDisk d(from_c(center), rho);
        const auto pts = polar::disk_boundary(d, static_cast<int>(m));
        for (std::size_t k = 0; k < pts.size(); ++k) out[k] = to_c(pts[k]);
    });
}

polar_status polar_disk_log_distance(polar_point center, polar_point p, double* out) {
    if (!out) return null_arg();
    return guard([&] {
        const polar::PolarDisk d(from_c(center), 1.0);
        *out = d.log_distance(from_c(p));
    });
}

polar_status polar_disk_svg(polar_point center, double rho, size_t m, char** out) {
    if (!out) return null_arg();
    return guard([&] {
        const polar::PolarDisk d(from_c(center), rho);
        *out = dup_string(polar::disk_to_svg(d, static_cast<int>(m)));
    });
}

polar_status polar_max_radius(polar_point center, const polar_point* vertices,
                              const size_t* component_sizes, const int* closed,
                              size_t n_components, double* out) {
    if (!out || (n_components > 0 && (!vertices || !component_sizes))) return null_arg();
    return guard([&] {
        polar::LogDomain domain;
        std::size_t offset = 0;
        for (std::size_t k = 0; k < n_components; ++k) {
            std::vector<polar::PolarPoint> poly;
            poly.reserve(component_sizes[k]);
            for (std::size_t i = 0; i < component_sizes[k]; ++i)
                poly.push_back(from_c(vertices[offset + i]));
            offset += component_sizes[k];
            domain.add_component(poly, closed ? closed[k] != 0 : false);
        }
        *out = polar::max_radius(from_c(center), domain);
    });
}

int polar_default_sample_count(int order) { return polar::default_sample_count(order); }

polar_status polar_taylor_create(const polar_expr* e, polar_point center, int order,
                                 double sample_radius, int samples, polar_taylor** out) {
    if (!e || !out) return null_arg();
    return guard([&] {
        const int n = samples > 0 ? samples : polar::default_sample_count(order);
        *out = new polar_taylor{polar::taylor(e->e, from_c(center), order, sample_radius, n)};
    });
}

void polar_taylor_free(polar_taylor* t) { delete t; }

int polar_taylor_order(const polar_taylor* t) {
    return t ? static_cast<int>(t->t.coefficients.size()) - 1 : -1;
}

polar_status polar_taylor_coefficient(const polar_taylor* t, int k, polar_complex* out) {
    if (!t || !out) return null_arg();
    if (k < 0 || static_cast<std::size_t>(k) >= t->t.coefficients.size())
        return fail(POLAR_E_INVALID_ARGUMENT, "coefficient index out of range");
    *out = to_c(t->t.coefficients[static_cast<std::size_t>(k)]);
    return POLAR_OK;
}

void polar_taylor_info(const polar_taylor* t, double* sample_radius, int* sample_count,
                       double* tail_estimate) {
    if (!t) return;
    if (sample_radius) *sample_radius = t->t.sample_radius;
    if (sample_count) *sample_count = t->t.sample_count;
    if (tail_estimate) *tail_estimate = t->t.tail_estimate;
}

polar_status polar_taylor_eval(const polar_taylor* t, polar_point p, polar_complex* out) {
    if (!t || !out) return null_arg();
    return guard([&] { *out = to_c(polar::taylor_eval(t->t, from_c(p))); });
}

polar_status polar_taylor_to_json(const polar_taylor* t, char** out) {
    if (!t || !out) return null_arg();
    return guard([&] { *out = dup_string(polar::to_json(t->t)); });
}

polar_status polar_sin_alternative_expansion(polar_point p, int order, polar_complex* out) {
    if (!out) return null_arg();
    return guard([&] { *out = to_c(polar::sin_alternative_expansion(from_c(p), order)); });
}

// ---- curves

polar_status polar_curve_parse(const char* source, polar_curve** out) {
    if (!source || !out) return null_arg();
    return guard([&] { *out = new polar_curve{polar::parse_curve(source)}; });
}

polar_status polar_curve_rect(polar_rect rect, polar_curve** out) {
    if (!out) return null_arg();
    return guard([&] { *out = new polar_curve{polar::Curve::rectangle(from_c(rect))}; });
}

polar_status polar_curve_reverse(const polar_curve* c, polar_curve** out) {
    if (!c || !out) return null_arg();
    return guard([&] { *out = new polar_curve{c->c.reversed()}; });
}

polar_status polar_curve_concat(const polar_curve* a, const polar_curve* b, polar_curve** out) {
    if (!a || !b || !out) return null_arg();
    return guard([&] { *out = new polar_curve{a->c.then(b->c)}; });
}

void polar_curve_free(polar_curve* c) { delete c; }

void polar_curve_endpoints(const polar_curve* c, polar_point* start, polar_point* end) {
    if (!c) return;
    if (start) *start = to_c(c->c.start());
    if (end) *end = to_c(c->c.end());
}

int polar_curve_is_closed(const polar_curve* c) { return c ? c->c.closed() : 0; }
size_t polar_curve_piece_count(const polar_curve* c) { return c ? c->c.pieces().size() : 0; }
double polar_curve_length(const polar_curve* c) { return c ? c->c.length() : 0.0; }
size_t polar_curve_warning_count(const polar_curve* c) { return c ? c->c.warnings().size() : 0; }

const char* polar_curve_warning(const polar_curve* c, size_t index) {
    if (!c || index >= c->c.warnings().size()) return nullptr;
    return c->c.warnings()[index].c_str();
}

polar_status polar_curve_describe(const polar_curve* c, char** out) {
    if (!c || !out) return null_arg();
    return guard([&] { *out = dup_string(c->c.describe()); });
}

polar_status polar_curve_sample(const polar_curve* c, int per_piece, polar_point* out,
                                size_t capacity, size_t* count) {
    if (!c || !out || !count) return null_arg();
    if (per_piece < 2) return fail(POLAR_E_INVALID_ARGUMENT, "need at least 2 samples per piece");
    const std::size_t need = c->c.pieces().size() * static_cast<std::size_t>(per_piece);
    if (capacity < need) return fail(POLAR_E_INVALID_ARGUMENT, "sample buffer too small");
    return guard([&] {
        std::size_t n = 0;
        for (const auto& piece : c->c.pieces()) {
            for (int k = 0; k < per_piece; ++k) {
                const double t = polar::grid_node(piece.t_begin(), piece.t_end(), k, per_piece);
                const polar::CurveSample s = piece.at(t);
                out[n++] = {s.r, s.theta};
            }
        }
        *count = n;
    });
}

polar_status polar_line_integral(const polar_expr* e, const polar_curve* c, double tol,
                                 size_t max_evaluations, polar_integral* out) {
    if (!e || !c || !out) return null_arg();
    const std::size_t budget = max_evaluations ? max_evaluations : polar::kDefaultEvaluationBudget;
    g_last_error.clear();
    try {
        *out = to_c(polar::line_integral(e->e, c->c, tol, budget));
        return POLAR_OK;
    } catch (const polar::ToleranceError& err) {
        *out = to_c(err.best());
        return fail(POLAR_E_TOLERANCE, err.what());
    } catch (...) {
        return guard([] { throw; });
    }
}

polar_status polar_path_check(const polar_expr* e, const polar_curve* first,
                              const polar_curve* second, double tol, polar_path_report* out) {
    if (!e || !first || !second || !out) return null_arg();
    return guard([&] {
        const auto r = polar::path_independence_check(e->e, first->c, second->c, tol);
        *out = {to_c(r.first), to_c(r.second), r.difference, r.pass};
    });
}

polar_status polar_morera_scan(const polar_expr* e, polar_rect region, int m, int n, double tol,
                               polar_morera** out) {
    if (!e || !out) return null_arg();
    return guard([&] { *out = new polar_morera{polar::morera_scan(e->e, from_c(region), m, n, tol)}; });
}

void polar_morera_free(polar_morera* scan) { delete scan; }

void polar_morera_get_summary(const polar_morera* scan, polar_morera_summary* out) {
    if (!scan || !out) return;
    const auto& m = scan->m;
    out->max_abs = m.max_abs;
    out->has_argmax = m.argmax.has_value();
    out->argmax = m.argmax ? to_c(*m.argmax) : polar_rect{0, 0, 0, 0};
    out->argmax_i = m.argmax_i;
    out->argmax_j = m.argmax_j;
    out->scale = m.scale;
    out->consistent = m.consistent;
    out->evaluated = m.evaluated;
    out->skipped = m.skipped.size();
}

polar_status polar_morera_skipped(const polar_morera* scan, size_t index, int* i, int* j,
                                  const char** message) {
    if (!scan) return null_arg();
    if (index >= scan->m.skipped.size())
        return fail(POLAR_E_INVALID_ARGUMENT, "skipped index out of range");
    const auto& s = scan->m.skipped[index];
    if (i) *i = s.i;
    if (j) *j = s.j;
    if (message) *message = s.message.c_str();
    return POLAR_OK;
}

// ---- geometry

polar_status polar_jacobian_at(const polar_expr* e, polar_point p, polar_jacobian* out) {
    if (!e || !out) return null_arg();
    return guard([&] {
        const polar::Jacobian2 j = polar::jacobian(e->e, from_c(p));
        *out = {j.a11, j.a12, j.a21, j.a22};
    });
}

polar_status polar_angle_alpha(double phi1, double phi2, double* out) {
    if (!out) return null_arg();
    return guard([&] { *out = polar::angle_alpha(phi1, phi2); });
}

polar_status polar_angle_beta(double r0, double phi1, double phi2, double* out) {
    if (!out) return null_arg();
    return guard([&] { *out = polar::angle_beta(r0, phi1, phi2); });
}

polar_status polar_cos_beta(double r0, double phi1, double phi2, double* out) {
    if (!out) return null_arg();
    return guard([&] { *out = polar::cos_beta(r0, phi1, phi2); });
}

polar_status polar_angle_beta_jacobian(const polar_expr* e, polar_point p, double phi1,
                                       double phi2, double* out) {
    if (!e || !out) return null_arg();
    return guard([&] { *out = polar::angle_beta_via_jacobian(e->e, from_c(p), phi1, phi2); });
}

polar_status polar_beta_profile_tangents(double t1, double t2, polar_beta_profile* out) {
    if (!out) return null_arg();
    return guard([&] { *out = to_c(polar::beta_profile(t1, t2)); });
}

polar_status polar_beta_profile_angles(double phi1, double phi2, polar_beta_profile* out) {
    if (!out) return null_arg();
    return guard([&] { *out = to_c(polar::beta_profile_from_angles(phi1, phi2)); });
}

polar_status polar_cos_beta_slope_sign(double r0, double t1, double t2, int* out) {
    if (!out) return null_arg();
    return guard([&] { *out = polar::cos_beta_slope_sign(r0, t1, t2); });
}

polar_status polar_net_create(const polar_expr* e, const double* r_values, size_t n_r,
                              const double* theta_values, size_t n_theta, int samples,
                              polar_net** out) {
    if (!e || !out || (n_r && !r_values) || (n_theta && !theta_values)) return null_arg();
    return guard([&] {
        *out = new polar_net{polar::map_net(e->e, std::span<const double>(r_values, n_r),
                                            std::span<const double>(theta_values, n_theta),
                                            samples)};
    });
}

void polar_net_free(polar_net* net) { delete net; }
size_t polar_net_curve_count(const polar_net* net) { return net ? net->n.curves.size() : 0; }

polar_status polar_net_curve(const polar_net* net, size_t index, polar_net_curve_info* out) {
    if (!net || !out) return null_arg();
    if (index >= net->n.curves.size()) return fail(POLAR_E_INVALID_ARGUMENT, "curve index out of range");
    const auto& c = net->n.curves[index];
    out->id = c.id.c_str();
    out->family = c.family == polar::NetCurve::Family::RLine ? 0 : 1;
    out->value = c.value;
    out->points = c.image.size();
    out->truncated = c.truncated.has_value();
    out->truncation_reason = c.truncated ? c.truncated->c_str() : nullptr;
    return POLAR_OK;
}

polar_status polar_net_curve_point(const polar_net* net, size_t index, size_t k, double* t,
                                   polar_complex* w) {
    if (!net) return null_arg();
    if (index >= net->n.curves.size()) return fail(POLAR_E_INVALID_ARGUMENT, "curve index out of range");
    const auto& c = net->n.curves[index];
    if (k >= c.image.size()) return fail(POLAR_E_INVALID_ARGUMENT, "point index out of range");
    if (t) *t = c.params[k];
    if (w) *w = to_c(c.image[k]);
    return POLAR_OK;
}

size_t polar_net_intersection_count(const polar_net* net) {
    return net ? net->n.intersections.size() : 0;
}

polar_status polar_net_intersection_at(const polar_net* net, size_t index,
                                       polar_net_intersection* out) {
    if (!net || !out) return null_arg();
    if (index >= net->n.intersections.size())
        return fail(POLAR_E_INVALID_ARGUMENT, "intersection index out of range");
    const auto& x = net->n.intersections[index];
    out->point = to_c(x.point);
    out->r_line = x.r_line;
    out->theta_line = x.theta_line;
    out->image = to_c(x.image);
    out->tangent_r_line = to_c(x.tangent_r_line);
    out->tangent_theta_line = to_c(x.tangent_theta_line);
    out->normalized_inner = x.normalized_inner;
    out->det_j = x.det_j;
    out->dpol_vanishes = x.dpol_vanishes;
    out->error = x.error.empty() ? nullptr : x.error.c_str();
    return POLAR_OK;
}

double polar_net_max_abs_inner(const polar_net* net) { return net ? net->n.max_abs_inner : 0.0; }

polar_status polar_net_to_csv(const polar_net* net, char** out) {
    if (!net || !out) return null_arg();
    return guard([&] { *out = dup_string(polar::net_to_csv(net->n)); });
}

polar_status polar_net_to_svg(const polar_net* net, char** out) {
    if (!net || !out) return null_arg();
    return guard([&] { *out = dup_string(polar::net_to_svg(net->n)); });
}

// ---- Mellin

polar_status polar_mellin_derivative(const polar_expr* phi, double c, double x,
                                     polar_complex* out) {
    if (!phi || !out) return null_arg();
    return guard([&] {
        *out = to_c(polar::mellin_derivative(phi->e, polar::MellinConstant(c), x));
    });
}

polar_status polar_mellin_polar_derivative(const polar_expr* e, double c, polar_point p,
                                           polar_complex* out) {
    if (!e || !out) return null_arg();
    return guard([&] {
        *out = to_c(polar::mellin_polar_derivative(e->e, polar::MellinConstant(c), from_c(p)));
    });
}

polar_status polar_iterated_theta0(const polar_expr* e, polar_point p, int k, polar_complex* out) {
    if (!e || !out) return null_arg();
    return guard([&] { *out = to_c(polar::iterated_theta0(e->e, from_c(p), k)); });
}

} // extern "C"
