// polar-calc: command-line front end over the polarcalc C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polar/polar_c.h"

using Json = nlohmann::ordered_json;

namespace {

// ---- errors

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
    ApiError(polar_status s, const std::string& message, std::size_t off)
        : std::runtime_error(message), status(s), offset(off) {}
    polar_status status;
    std::size_t offset;
};

void check(polar_status s) {
    if (s != POLAR_OK) throw ApiError(s, polar_last_error(), polar_last_error_offset());
}

bool is_verdict_status(polar_status s) {
    return s == POLAR_E_TOLERANCE || s == POLAR_E_NOT_ANALYTIC ||
           s == POLAR_E_VANISHING_DERIVATIVE;
}

// ---- handles

struct ExprDeleter {
    void operator()(polar_expr* p) const { polar_expr_free(p); }
};
struct CurveDeleter {
    void operator()(polar_curve* p) const { polar_curve_free(p); }
};
struct TaylorDeleter {
    void operator()(polar_taylor* p) const { polar_taylor_free(p); }
};
struct CrDeleter {
    void operator()(polar_cr_scan* p) const { polar_cr_scan_free(p); }
};
struct MoreraDeleter {
    void operator()(polar_morera* p) const { polar_morera_free(p); }
};
struct NetDeleter {
    void operator()(polar_net* p) const { polar_net_free(p); }
};
struct StringDeleter {
    void operator()(char* p) const { polar_string_free(p); }
};

using ExprPtr = std::unique_ptr<polar_expr, ExprDeleter>;
using CurvePtr = std::unique_ptr<polar_curve, CurveDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

ExprPtr parse_expr(const std::string& src) {
    polar_expr* e = nullptr;
    check(polar_expr_parse(src.c_str(), &e));
    return ExprPtr(e);
}

CurvePtr parse_curve(const std::string& src) {
    polar_curve* c = nullptr;
    check(polar_curve_parse(src.c_str(), &c));
    return CurvePtr(c);
}

std::string take(char* s) {
    OwnedString owned(s);
    return std::string(owned.get());
}

// ---- argument values

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

// A decimal number, or pi / -pi / pi/N / -pi/N.
double parse_number(std::string_view text, const std::string& what) {
    std::string_view s = trim(text);
    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.starts_with("pi")) {
        double v = std::numbers::pi;
        body.remove_prefix(2);
        if (!body.empty()) {
            if (body.front() != '/') throw UsageError(what + ": cannot read '" + std::string(s) + "'");
            body.remove_prefix(1);
            double d = 0.0;
            auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), d);
            if (ec != std::errc() || ptr != body.data() + body.size() || d == 0.0)
                throw UsageError(what + ": cannot read '" + std::string(s) + "'");
            v /= d;
        }
        return negative ? -v : v;
    }
    double v = 0.0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw UsageError(what + ": cannot read '" + std::string(s) + "' as a number");
    return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        out.push_back(parse_number(rest.substr(0, comma), what));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<double> parse_fixed(const std::string& text, std::size_t n, const std::string& what) {
    auto v = parse_list(text, what);
    if (v.size() != n)
        throw UsageError(what + ": expected " + std::to_string(n) + " comma-separated numbers");
    return v;
}

polar_point parse_point(const std::string& text, const std::string& what) {
    const auto v = parse_fixed(text, 2, what);
    return {v[0], v[1]};
}

polar_rect parse_rect(const std::string& text) {
    const auto v = parse_fixed(text, 4, "--rect");
    return {v[0], v[1], v[2], v[3]};
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) throw UsageError("--grid: expected MxN");
    auto read = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 1)
            throw UsageError("--grid: expected MxN with positive integers");
        return v;
    };
    const std::string_view s = text;
    return {read(s.substr(0, x)), read(s.substr(x + 1))};
}

// ---- JSON helpers

Json cjson(polar_complex z) { return Json::array({z.re, z.im}); }
Json pjson(polar_point p) { return Json{{"r", p.r}, {"theta", p.theta}}; }
Json rjson(polar_rect r) {
    return Json{{"r_min", r.r_min}, {"r_max", r.r_max}, {"theta_min", r.theta_min},
                {"theta_max", r.theta_max}};
}
Json ijson(const polar_integral& i) {
    return Json{{"value", cjson(i.value)}, {"error_estimate", i.error_estimate},
                {"evaluations", i.evaluations}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw UsageError("failed writing '" + path + "'");
}

// ---- parsed arguments

struct Args {
    std::string expr;
    std::string at, center, rect, grid, rlines, thetalines, svg, csv;
    std::vector<std::string> curves;
    std::optional<int> order;
    std::optional<int> samples;
    std::optional<double> radius, tol, r0, phi1, phi2, c, x;
    bool expect_analytic = false;
    bool json = true;
    bool timing = false;
};

struct Report {
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<std::string> diagnostics;
    int exit_code = 0;
};

double need(const std::optional<double>& v, const char* flag) {
    if (!v) throw UsageError(std::string(flag) + " is required");
    return *v;
}

const std::string& need(const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string(flag) + " is required");
    return v;
}

// ---- subcommands

void cmd_eval(const Args& a, Report& rep) {
    const polar_point p = parse_point(need(a.at, "--at"), "--at");
    rep.inputs["expr"] = a.expr;
    rep.inputs["at"] = pjson(p);
    auto e = parse_expr(a.expr);
    polar_complex v;
    check(polar_eval(e.get(), p, &v));
    rep.outputs["value"] = cjson(v);
    rep.outputs["canonical"] = take([&] {
        char* s = nullptr;
        check(polar_expr_print(e.get(), &s));
        return s;
    }());
}

void cmd_check_cr(const Args& a, Report& rep) {
    rep.inputs["expr"] = a.expr;
    auto e = parse_expr(a.expr);
    const double tol = a.tol.value_or(1e-8);
    rep.inputs["tol"] = tol;
    if (!a.at.empty() && a.rect.empty()) {
        const polar_point p = parse_point(a.at, "--at");
        rep.inputs["at"] = pjson(p);
        polar_dual d;
        check(polar_eval_dual(e.get(), p, &d));
        polar_complex res;
        check(polar_cr_residual(e.get(), p, &res));
        const double abs_res = std::hypot(res.re, res.im);
        const double dr = std::hypot(d.dr.re, d.dr.im);
        const double scale = std::max({1.0, std::hypot(d.val.re, d.val.im), dr, p.r * dr});
        rep.outputs["residual"] = cjson(res);
        rep.outputs["abs_residual"] = abs_res;
        rep.outputs["scale"] = scale;
        rep.outputs["analytic"] = abs_res / scale <= tol;
        if (a.expect_analytic && abs_res / scale > tol) rep.exit_code = 1;
        return;
    }
    const polar_rect r = parse_rect(need(a.rect, "--rect"));
    const auto [m, n] = a.grid.empty() ? std::pair{33, 33} : parse_grid(a.grid);
    rep.inputs["rect"] = rjson(r);
    rep.inputs["grid"] = Json::array({m, n});
    polar_cr_scan* raw = nullptr;
    check(polar_check_cr_grid(e.get(), r, m, n, tol, &raw));
    std::unique_ptr<polar_cr_scan, CrDeleter> scan(raw);
    polar_cr_summary s;
    polar_cr_scan_summary(scan.get(), &s);
    rep.outputs["max_residual"] = s.max_residual;
    rep.outputs["argmax"] = s.has_argmax ? pjson(s.argmax) : Json(nullptr);
    rep.outputs["max_scaled_residual"] = s.max_scaled_residual;
    rep.outputs["evaluated"] = s.evaluated;
    Json failures = Json::array();
    for (std::size_t k = 0; k < s.failures; ++k) {
        polar_point p;
        const char* msg = nullptr;
        check(polar_cr_scan_failure(scan.get(), k, &p, &msg));
        failures.push_back(Json{{"point", pjson(p)}, {"message", msg}});
    }
    rep.outputs["failures"] = failures;
    rep.outputs["analytic"] = s.analytic != 0;
    if (s.failures) rep.diagnostics.push_back(std::to_string(s.failures) + " grid nodes failed to evaluate");
    if (a.expect_analytic && !s.analytic) rep.exit_code = 1;
}

void cmd_dpol(const Args& a, Report& rep) {
    const polar_point p = parse_point(need(a.at, "--at"), "--at");
    rep.inputs["expr"] = a.expr;
    rep.inputs["at"] = pjson(p);
    auto e = parse_expr(a.expr);
    polar_derivative_report d;
    check(polar_derivative(e.get(), p, &d));
    polar_dual dual;
    check(polar_eval_dual(e.get(), p, &dual));
    const double dr = std::hypot(dual.dr.re, dual.dr.im);
    const double scale = std::max({1.0, std::hypot(d.value.re, d.value.im), dr, p.r * dr});
    const double scaled = std::hypot(d.cr_residual.re, d.cr_residual.im) / scale;
    const double tol = a.tol.value_or(1e-8);
    rep.outputs["value"] = cjson(d.dpol_via_r);
    rep.outputs["dpol_via_theta"] = cjson(d.dpol_via_theta);
    rep.outputs["f"] = cjson(d.value);
    rep.outputs["cr_residual"] = cjson(d.cr_residual);
    rep.outputs["analytic_at_point"] = scaled <= tol;
    if (scaled > tol) {
        rep.diagnostics.push_back("polar Cauchy-Riemann equations fail at this point; "
                                  "D_pol is not defined and the two formulas disagree");
        if (a.expect_analytic) rep.exit_code = 1;
    }
}

void cmd_taylor(const Args& a, Report& rep) {
    const polar_point c = parse_point(need(a.center, "--center"), "--center");
    const int order = a.order.value_or(8);
    const double rho = a.radius.value_or(0.8);
    const int samples = a.samples.value_or(polar_default_sample_count(order));
    rep.inputs["expr"] = a.expr;
    rep.inputs["center"] = pjson(c);
    rep.inputs["order"] = order;
    rep.inputs["radius"] = rho;
    rep.inputs["samples"] = samples;
    auto e = parse_expr(a.expr);
    polar_taylor* raw = nullptr;
    check(polar_taylor_create(e.get(), c, order, rho, samples, &raw));
    std::unique_ptr<polar_taylor, TaylorDeleter> t(raw);
    char* js = nullptr;
    check(polar_taylor_to_json(t.get(), &js));
    rep.outputs = Json::parse(take(js));
    rep.outputs["sample_count"] = samples;
    if (!a.at.empty()) {
        const polar_point p = parse_point(a.at, "--at");
        polar_complex sum, direct;
        check(polar_taylor_eval(t.get(), p, &sum));
        check(polar_eval(e.get(), p, &direct));
        rep.inputs["at"] = pjson(p);
        rep.outputs["at"] = Json{{"partial_sum", cjson(sum)},
                                 {"direct", cjson(direct)},
                                 {"abs_error", std::hypot(sum.re - direct.re, sum.im - direct.im)}};
        double dist = 0.0;
        check(polar_disk_log_distance(c, p, &dist));
        if (dist >= rho)
            rep.diagnostics.push_back("--at lies outside the sampling circle; the partial sum may not converge there");
    }
}

void cmd_disk(const Args& a, Report& rep) {
    const polar_point c = parse_point(need(a.center, "--center"), "--center");
    const double rho = need(a.radius, "--radius");
    const int m = a.samples.value_or(64);
    if (m < 8) throw UsageError("--samples must be at least 8 for disk boundaries");
    rep.inputs["center"] = pjson(c);
    rep.inputs["radius"] = rho;
    rep.inputs["samples"] = m;
    std::vector<polar_point> pts(static_cast<std::size_t>(m));
    check(polar_disk_boundary(c, rho, pts.size(), pts.data()));
    Json boundary = Json::array();
    double worst = 0.0;
    for (const auto& p : pts) {
        double d = 0.0;
        check(polar_disk_log_distance(c, p, &d));
        worst = std::max(worst, std::abs(d - rho));
        boundary.push_back(Json::array({p.r, p.theta}));
    }
    rep.outputs["boundary"] = boundary;
    rep.outputs["max_membership_error"] = worst;
    if (!a.at.empty()) {
        const polar_point p = parse_point(a.at, "--at");
        double d = 0.0;
        check(polar_disk_log_distance(c, p, &d));
        rep.inputs["at"] = pjson(p);
        rep.outputs["at"] = Json{{"log_distance", d}, {"contains", d < rho}};
    }
    if (!a.svg.empty()) {
        char* s = nullptr;
        check(polar_disk_svg(c, rho, pts.size(), &s));
        write_file(a.svg, take(s));
        rep.inputs["svg"] = a.svg;
    }
    if (!a.csv.empty()) {
        std::string csv = "k,r,theta\n";
        for (std::size_t k = 0; k < pts.size(); ++k) {
            Json row = Json::array({pts[k].r, pts[k].theta});
            csv += std::to_string(k) + "," + row[0].dump() + "," + row[1].dump() + "\n";
        }
        write_file(a.csv, csv);
        rep.inputs["csv"] = a.csv;
    }
}

void cmd_maxradius(const Args& a, Report& rep) {
    const polar_point c = parse_point(need(a.center, "--center"), "--center");
    const int per_piece = a.samples.value_or(256);
    rep.inputs["center"] = pjson(c);
    rep.inputs["samples"] = per_piece;
    std::vector<polar_point> vertices;
    std::vector<std::size_t> sizes;
    std::vector<int> closed;
    Json components = Json::array();
    if (!a.rect.empty()) {
        const polar_rect r = parse_rect(a.rect);
        rep.inputs["rect"] = rjson(r);
        vertices.insert(vertices.end(), {{r.r_min, r.theta_min},
                                         {r.r_max, r.theta_min},
                                         {r.r_max, r.theta_max},
                                         {r.r_min, r.theta_max}});
        sizes.push_back(4);
        closed.push_back(1);
        components.push_back(Json{{"source", "rect"}, {"vertices", 4}, {"closed", true}});
    }
    for (const auto& spec : a.curves) {
        auto curve = parse_curve(spec);
        std::vector<polar_point> buf(polar_curve_piece_count(curve.get()) *
                                     static_cast<std::size_t>(per_piece));
        std::size_t n = 0;
        check(polar_curve_sample(curve.get(), per_piece, buf.data(), buf.size(), &n));
        const bool is_closed = polar_curve_is_closed(curve.get()) != 0;
        vertices.insert(vertices.end(), buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(n));
        sizes.push_back(n);
        closed.push_back(is_closed ? 1 : 0);
        components.push_back(Json{{"source", spec}, {"vertices", n}, {"closed", is_closed}});
    }
    if (sizes.empty()) throw UsageError("maxradius needs at least one --curve or --rect");
    rep.inputs["components"] = components;
    double rho = 0.0;
    check(polar_max_radius(c, vertices.data(), sizes.data(), closed.data(), sizes.size(), &rho));
    rep.outputs["radius"] = rho;
}

void cmd_integrate(const Args& a, Report& rep) {
    if (a.curves.size() != 1) throw UsageError("integrate needs exactly one --curve");
    const double tol = a.tol.value_or(1e-10);
    rep.inputs["expr"] = a.expr;
    rep.inputs["curve"] = a.curves[0];
    rep.inputs["tol"] = tol;
    auto e = parse_expr(a.expr);
    auto c = parse_curve(a.curves[0]);
    for (std::size_t k = 0; k < polar_curve_warning_count(c.get()); ++k)
        rep.diagnostics.emplace_back(polar_curve_warning(c.get(), k));
    polar_integral out{};
    const polar_status s = polar_line_integral(e.get(), c.get(), tol, 0, &out);
    if (s != POLAR_OK && s != POLAR_E_TOLERANCE) check(s);
    rep.outputs = ijson(out);
    rep.outputs["closed"] = polar_curve_is_closed(c.get()) != 0;
    rep.outputs["length"] = polar_curve_length(c.get());
    rep.outputs["converged"] = s == POLAR_OK;
    if (s == POLAR_E_TOLERANCE) {
        rep.diagnostics.push_back(polar_last_error());
        rep.exit_code = 1;
    }
}

void cmd_path_check(const Args& a, Report& rep) {
    if (a.curves.size() != 2) throw UsageError("path-check needs exactly two --curve options");
    const double tol = a.tol.value_or(1e-8);
    rep.inputs["expr"] = a.expr;
    rep.inputs["curves"] = a.curves;
    rep.inputs["tol"] = tol;
    auto e = parse_expr(a.expr);
    auto c1 = parse_curve(a.curves[0]);
    auto c2 = parse_curve(a.curves[1]);
    polar_path_report r;
    check(polar_path_check(e.get(), c1.get(), c2.get(), tol, &r));
    rep.outputs["first"] = ijson(r.first);
    rep.outputs["second"] = ijson(r.second);
    rep.outputs["difference"] = r.difference;
    rep.outputs["pass"] = r.pass != 0;
    if (!r.pass) rep.exit_code = 1;
}

void cmd_morera(const Args& a, Report& rep) {
    const polar_rect r = parse_rect(need(a.rect, "--rect"));
    const auto [m, n] = a.grid.empty() ? std::pair{4, 4} : parse_grid(a.grid);
    const double tol = a.tol.value_or(1e-8);
    rep.inputs["expr"] = a.expr;
    rep.inputs["rect"] = rjson(r);
    rep.inputs["grid"] = Json::array({m, n});
    rep.inputs["tol"] = tol;
    auto e = parse_expr(a.expr);
    polar_morera* raw = nullptr;
    check(polar_morera_scan(e.get(), r, m, n, tol, &raw));
    std::unique_ptr<polar_morera, MoreraDeleter> scan(raw);
    polar_morera_summary s;
    polar_morera_get_summary(scan.get(), &s);
    rep.outputs["max_abs"] = s.max_abs;
    rep.outputs["argmax"] = s.has_argmax ? rjson(s.argmax) : Json(nullptr);
    rep.outputs["argmax_index"] =
        s.has_argmax ? Json::array({s.argmax_i, s.argmax_j}) : Json(nullptr);
    rep.outputs["scale"] = s.scale;
    rep.outputs["threshold"] = tol * (1.0 + s.scale);
    rep.outputs["evaluated"] = s.evaluated;
    Json skipped = Json::array();
    for (std::size_t k = 0; k < s.skipped; ++k) {
        int i = 0, j = 0;
        const char* msg = nullptr;
        check(polar_morera_skipped(scan.get(), k, &i, &j, &msg));
        skipped.push_back(Json{{"index", Json::array({i, j})}, {"message", msg}});
    }
    rep.outputs["skipped"] = skipped;
    rep.outputs["verdict"] = s.consistent ? "consistent" : "inconsistent";
    if (a.expect_analytic && !s.consistent) rep.exit_code = 1;
}

void cmd_angle(const Args& a, Report& rep) {
    const double r0 = need(a.r0, "--r0");
    const double p1 = need(a.phi1, "--phi1");
    const double p2 = need(a.phi2, "--phi2");
    rep.inputs["r0"] = r0;
    rep.inputs["phi1"] = p1;
    rep.inputs["phi2"] = p2;
    double alpha = 0, beta = 0, cb = 0;
    check(polar_angle_alpha(p1, p2, &alpha));
    check(polar_angle_beta(r0, p1, p2, &beta));
    check(polar_cos_beta(r0, p1, p2, &cb));
    rep.outputs["alpha"] = alpha;
    rep.outputs["beta"] = beta;
    rep.outputs["cos_beta"] = cb;
    rep.outputs["distortion"] = beta - alpha;
}

void cmd_angle_jac(const Args& a, Report& rep) {
    const polar_point p = parse_point(need(a.at, "--at"), "--at");
    const double p1 = need(a.phi1, "--phi1");
    const double p2 = need(a.phi2, "--phi2");
    rep.inputs["expr"] = a.expr;
    rep.inputs["at"] = pjson(p);
    rep.inputs["phi1"] = p1;
    rep.inputs["phi2"] = p2;
    auto e = parse_expr(a.expr);
    polar_jacobian j;
    check(polar_jacobian_at(e.get(), p, &j));
    double via_j = 0, closed = 0;
    check(polar_angle_beta_jacobian(e.get(), p, p1, p2, &via_j));
    check(polar_angle_beta(p.r, p1, p2, &closed));
    rep.outputs["beta"] = via_j;
    rep.outputs["beta_closed_form"] = closed;
    rep.outputs["difference"] = std::abs(via_j - closed);
    rep.outputs["jacobian"] = Json::array({Json::array({j.a11, j.a12}), Json::array({j.a21, j.a22})});
    rep.outputs["det"] = j.a11 * j.a22 - j.a12 * j.a21;
}

void cmd_beta_profile(const Args& a, Report& rep) {
    const double p1 = need(a.phi1, "--phi1");
    const double p2 = need(a.phi2, "--phi2");
    rep.inputs["phi1"] = p1;
    rep.inputs["phi2"] = p2;
    polar_beta_profile b;
    check(polar_beta_profile_angles(p1, p2, &b));
    rep.outputs["kind"] = b.kind == POLAR_BETA_INCREASING ? "increasing" : "min_at";
    rep.outputs["t1"] = b.t1;
    rep.outputs["t2"] = b.t2;
    rep.outputs["r0_star"] = b.has_r0_star ? Json(b.r0_star) : Json(nullptr);
    rep.outputs["beta_limit_at_zero"] = b.beta_limit_at_zero;
    rep.outputs["beta_limit_at_infinity"] = b.beta_limit_at_infinity;
    rep.outputs["constant"] = b.constant != 0;
    if (b.constant) rep.diagnostics.push_back("equal directions: cos(beta) does not depend on r0");
    if (a.r0) {
        int sign = 0;
        check(polar_cos_beta_slope_sign(*a.r0, b.t1, b.t2, &sign));
        rep.inputs["r0"] = *a.r0;
        rep.outputs["cos_beta_slope_sign"] = sign;
    }
}

void cmd_net(const Args& a, Report& rep) {
    const auto rl = parse_list(need(a.rlines, "--rlines"), "--rlines");
    const auto tl = parse_list(need(a.thetalines, "--thetalines"), "--thetalines");
    const int samples = a.samples.value_or(64);
    rep.inputs["expr"] = a.expr;
    rep.inputs["rlines"] = rl;
    rep.inputs["thetalines"] = tl;
    rep.inputs["samples"] = samples;
    auto e = parse_expr(a.expr);
    polar_net* raw = nullptr;
    check(polar_net_create(e.get(), rl.data(), rl.size(), tl.data(), tl.size(), samples, &raw));
    std::unique_ptr<polar_net, NetDeleter> net(raw);
    Json curves = Json::array();
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < polar_net_curve_count(net.get()); ++k) {
        polar_net_curve_info info;
        check(polar_net_curve(net.get(), k, &info));
        ids.emplace_back(info.id);
        Json c{{"id", info.id}, {"points", info.points}, {"truncated", info.truncated != 0}};
        if (info.truncated) {
            c["reason"] = info.truncation_reason;
            rep.diagnostics.push_back(std::string(info.id) + ": " + info.truncation_reason);
        }
        curves.push_back(c);
    }
    Json xs = Json::array();
    for (std::size_t k = 0; k < polar_net_intersection_count(net.get()); ++k) {
        polar_net_intersection x;
        check(polar_net_intersection_at(net.get(), k, &x));
        Json j{{"point", pjson(x.point)},
               {"r_line", ids.at(x.r_line)},
               {"theta_line", ids.at(x.theta_line)}};
        if (x.error) {
            j["error"] = x.error;
        } else {
            j["image"] = cjson(x.image);
            j["tangent_r_line"] = cjson(x.tangent_r_line);
            j["tangent_theta_line"] = cjson(x.tangent_theta_line);
            j["normalized_inner"] = x.normalized_inner;
            j["det_j"] = x.det_j;
            j["dpol_vanishes"] = x.dpol_vanishes != 0;
        }
        xs.push_back(j);
    }
    rep.outputs["curves"] = curves;
    rep.outputs["intersections"] = xs;
    const double inner = polar_net_max_abs_inner(net.get());
    rep.outputs["max_abs_inner"] = inner;
    rep.outputs["orthogonal"] = inner <= 1e-6;
    if (a.expect_analytic && inner > 1e-6) rep.exit_code = 1;
    if (!a.svg.empty()) {
        char* s = nullptr;
        check(polar_net_to_svg(net.get(), &s));
        write_file(a.svg, take(s));
        rep.inputs["svg"] = a.svg;
    }
    if (!a.csv.empty()) {
        char* s = nullptr;
        check(polar_net_to_csv(net.get(), &s));
        write_file(a.csv, take(s));
        rep.inputs["csv"] = a.csv;
    }
}

void cmd_mellin(const Args& a, Report& rep) {
    const double c = a.c.value_or(0.0);
    const double x = need(a.x, "--x");
    rep.inputs["expr"] = a.expr;
    rep.inputs["c"] = c;
    rep.inputs["x"] = x;
    polar_expr* raw = nullptr;
    check(polar_expr_parse_univariate(a.expr.c_str(), "x", &raw));
    ExprPtr phi(raw);
    polar_complex v, f;
    check(polar_mellin_derivative(phi.get(), c, x, &v));
    check(polar_eval_x(phi.get(), x, &f));
    rep.outputs["value"] = cjson(v);
    rep.outputs["phi"] = cjson(f);
}

void cmd_theta_pol(const Args& a, Report& rep) {
    const polar_point p = parse_point(need(a.at, "--at"), "--at");
    const double c = a.c.value_or(0.0);
    rep.inputs["expr"] = a.expr;
    rep.inputs["c"] = c;
    rep.inputs["at"] = pjson(p);
    auto e = parse_expr(a.expr);
    polar_complex v;
    check(polar_mellin_polar_derivative(e.get(), c, p, &v));
    rep.outputs["value"] = cjson(v);
    if (a.order) {
        if (*a.order < 0 || *a.order > 4) throw UsageError("--order must be in [0, 4] for theta-pol");
        rep.inputs["order"] = *a.order;
        Json it = Json::array();
        for (int k = 0; k <= *a.order; ++k) {
            polar_complex w;
            check(polar_iterated_theta0(e.get(), p, k, &w));
            it.push_back(cjson(w));
        }
        rep.outputs["iterated_theta0"] = it;
    }
}

// ---- command table

enum Flag : unsigned {
    kAt = 1u << 0,
    kCenter = 1u << 1,
    kOrder = 1u << 2,
    kRadius = 1u << 3,
    kSamples = 1u << 4,
    kCurve = 1u << 5,
    kRect = 1u << 6,
    kGrid = 1u << 7,
    kTol = 1u << 8,
    kR0 = 1u << 9,
    kPhi = 1u << 10,
    kC = 1u << 11,
    kLines = 1u << 12,
    kSvg = 1u << 13,
    kCsv = 1u << 14,
    kExpect = 1u << 15,
    kX = 1u << 16,
};

struct Command {
    const char* name;
    const char* help;
    bool takes_expr;
    unsigned flags;
    void (*run)(const Args&, Report&);
};

constexpr Command kCommands[] = {
    {"eval", "Evaluate f at a point", true, kAt, cmd_eval},
    {"check-cr", "Polar Cauchy-Riemann residual at a point or over a grid", true,
     kAt | kRect | kGrid | kTol | kExpect, cmd_check_cr},
    {"dpol", "Polar derivative at a point", true, kAt | kTol | kExpect, cmd_dpol},
    {"taylor", "Polar Taylor coefficients by contour sampling", true,
     kCenter | kOrder | kRadius | kSamples | kAt, cmd_taylor},
    {"disk", "Polar-disk boundary", false, kCenter | kRadius | kSamples | kAt | kSvg | kCsv,
     cmd_disk},
    {"maxradius", "Largest polar-disk inside a domain", false,
     kCenter | kCurve | kRect | kSamples, cmd_maxradius},
    {"integrate", "Line integral of f e^{i theta} (dr + i r dtheta)", true, kCurve | kTol,
     cmd_integrate},
    {"path-check", "Compare integrals along two curves with common endpoints", true,
     kCurve | kTol, cmd_path_check},
    {"morera", "Closed integrals over a grid of sub-rectangles", true,
     kRect | kGrid | kTol | kExpect, cmd_morera},
    {"angle", "Angle between two directions and between their images", false, kR0 | kPhi,
     cmd_angle},
    {"angle-jac", "Image angle from the Jacobian of f", true, kAt | kPhi, cmd_angle_jac},
    {"beta-profile", "Behaviour of the image angle as r0 varies", false, kPhi | kR0,
     cmd_beta_profile},
    {"net", "Image of a coordinate net", true, kLines | kSamples | kSvg | kCsv | kExpect, cmd_net},
    {"mellin", "Mellin derivative x phi'(x) + c phi(x)", true, kC | kX, cmd_mellin},
    {"theta-pol", "Mellin polar-derivative r e^{i theta} D_pol f + c f", true, kAt | kC | kOrder,
     cmd_theta_pol},
};

void add_options(CLI::App* sub, const Command& cmd, Args& a) {
    if (cmd.takes_expr)
        sub->add_option("expr", a.expr, "Expression (see grammar below)")->required();
    if (cmd.flags & kAt) sub->add_option("--at", a.at, "Point r,theta");
    if (cmd.flags & kCenter) sub->add_option("--center", a.center, "Center r,theta");
    if (cmd.flags & kOrder) sub->add_option("--order", a.order, "Order K");
    if (cmd.flags & kRadius) sub->add_option("--radius", a.radius, "Radius rho");
    if (cmd.flags & kSamples) sub->add_option("--samples", a.samples, "Sample count N");
    if (cmd.flags & kCurve)
        sub->add_option("--curve", a.curves, "Curve in the curve language (repeatable)")
            ->allow_extra_args(false);
    if (cmd.flags & kRect) sub->add_option("--rect", a.rect, "Rectangle a,b,c,d = [a,b]x[c,d]");
    if (cmd.flags & kGrid) sub->add_option("--grid", a.grid, "Grid MxN");
    if (cmd.flags & kTol) sub->add_option("--tol", a.tol, "Tolerance");
    if (cmd.flags & kR0) sub->add_option("--r0", a.r0, "Radius r0");
    if (cmd.flags & kPhi) {
        sub->add_option("--phi1", a.phi1, "First direction angle");
        sub->add_option("--phi2", a.phi2, "Second direction angle");
    }
    if (cmd.flags & kC) sub->add_option("--c", a.c, "Real constant c");
    if (cmd.flags & kX) sub->add_option("--x", a.x, "Point x > 0");
    if (cmd.flags & kLines) {
        sub->add_option("--rlines", a.rlines, "r values v1,v2,...");
        sub->add_option("--thetalines", a.thetalines, "theta values v1,v2,...");
    }
    if (cmd.flags & kSvg) sub->add_option("--svg", a.svg, "Write an SVG plot");
    if (cmd.flags & kCsv) sub->add_option("--csv", a.csv, "Write CSV samples");
    if (cmd.flags & kExpect)
        sub->add_flag("--expect-analytic", a.expect_analytic,
                      "Exit 1 unless the verdict is polar-analytic");
    sub->add_flag("--json", a.json, "JSON report on standard output (default)");
    sub->add_flag("--timing", a.timing, "Record wall time in the report");
}

void print_usage_error(const std::string& message) {
    std::cerr << "polar-calc: " << message << "\n\n" << polar_grammar_help() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar-analytic function calculator"};
    app.require_subcommand(1, 1);
    Args args;
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const Command& cmd : kCommands) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        add_options(sub, cmd, args);
        subs.emplace_back(sub, &cmd);
    }
    app.footer(polar_grammar_help());

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_usage_error(e.what());
        return 2;
    }

    const Command* cmd = nullptr;
    for (const auto& [sub, c] : subs)
        if (sub->parsed()) cmd = c;

    Report rep;
    Json error;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        cmd->run(args, rep);
    } catch (const UsageError& e) {
        print_usage_error(e.what());
        return 2;
    } catch (const ApiError& e) {
        rep.exit_code = is_verdict_status(e.status) ? 1 : 2;
        error = Json{{"status", polar_status_string(e.status)}, {"message", e.what()}};
        if (e.status == POLAR_E_PARSE || e.status == POLAR_E_UNKNOWN_IDENTIFIER) {
            error["offset"] = e.offset;
            print_usage_error(e.what());
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    const long long ms =
        args.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;

    Json report;
    report["command"] = cmd->name;
    report["inputs"] = rep.inputs;
    report["outputs"] = error.is_null() ? rep.outputs : Json(nullptr);
    report["diagnostics"] = rep.diagnostics;
    if (!error.is_null()) report["error"] = error;
    report["wall_time_ms"] = ms;
    std::cout << report.dump(2) << '\n';
    return rep.exit_code;
}
