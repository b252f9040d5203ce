#include "polar/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "parallel.hpp"
#include "polar/diffcore.hpp"
#include "polar/quadrature.hpp"

namespace polar {

namespace {

// Real forward-mode number for the named curve families.
struct Tangent {
    double v;
    double d;
};

Tangent operator*(double k, Tangent a) { return {k * a.v, k * a.d}; }
Tangent operator+(double k, Tangent a) { return {k + a.v, a.d}; }
Tangent exp(Tangent a) {
    const double e = std::exp(a.v);
    return {e, e * a.d};
}
Tangent cos(Tangent a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }
Tangent sin(Tangent a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }

double scaled_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

} // namespace

bool points_coincide(const PolarPoint& a, const PolarPoint& b, double tolerance) {
    return scaled_gap(a.r(), b.r()) <= tolerance && scaled_gap(a.theta(), b.theta()) <= tolerance;
}

// ---------------------------------------------------------------------------
// Pieces

CurvePiece CurvePiece::segment(const PolarPoint& from, const PolarPoint& to) {
    return CurvePiece(Segment{from.r(), from.theta(), to.r(), to.theta()}, 0.0, 1.0);
}

CurvePiece CurvePiece::log_spiral(const PolarPoint& from, const PolarPoint& to) {
    return CurvePiece(LogSpiral{from.r(), from.theta(), to.r(), to.theta()}, 0.0, 1.0);
}

CurvePiece CurvePiece::disk_arc(const PolarPoint& center, double rho, double phi_begin,
                                double phi_end) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw Error(ErrorCode::InvalidCurve, "disk arc radius must be positive");
    if (!(phi_begin <= phi_end) || !std::isfinite(phi_begin) || !std::isfinite(phi_end))
        throw Error(ErrorCode::InvalidCurve, "disk arc needs phi_begin <= phi_end");
    return CurvePiece(DiskArc{center.r(), center.theta(), rho}, phi_begin, phi_end);
}

CurvePiece CurvePiece::parametric(Expression r_of_t, Expression theta_of_t, double t_begin,
                                  double t_end, std::string variable) {
    if (uses_polar_variables(r_of_t) || uses_polar_variables(theta_of_t))
        throw Error(ErrorCode::InvalidCurve, "curve parametrization must be one-variable");
    if (!(t_begin <= t_end) || !std::isfinite(t_begin) || !std::isfinite(t_end))
        throw Error(ErrorCode::InvalidCurve, "parametric piece needs t0 <= t1");
    return CurvePiece(Parametric{std::move(r_of_t), std::move(theta_of_t), std::move(variable)},
                      t_begin, t_end);
}

CurveSample CurvePiece::base_at(double s) const {
    const Tangent t{s, 1.0};
    if (const auto* seg = std::get_if<Segment>(&shape_)) {
        const Tangent r = seg->r1 + (seg->r2 - seg->r1) * t;
        const Tangent th = seg->th1 + (seg->th2 - seg->th1) * t;
        return {r.v, th.v, r.d, th.d};
    }
    if (const auto* sp = std::get_if<LogSpiral>(&shape_)) {
        const Tangent r = sp->r1 * exp(std::log(sp->r2 / sp->r1) * t);
        const Tangent th = sp->th1 + (sp->th2 - sp->th1) * t;
        return {r.v, th.v, r.d, th.d};
    }
    if (const auto* arc = std::get_if<DiskArc>(&shape_)) {
        const Tangent r = arc->r0 * exp(arc->rho * cos(t));
        const Tangent th = arc->th0 + arc->rho * sin(t);
        return {r.v, th.v, r.d, th.d};
    }
    const auto& par = std::get<Parametric>(shape_);
    const Dual1 r = eval_dual_at(par.r, s);
    const Dual1 th = eval_dual_at(par.theta, s);
    auto real_part = [&](Complex v, const char* what) {
        if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
            throw Error(ErrorCode::InvalidCurve,
                        std::string("parametrization ") + what + " is not real at t = " +
                            format_number(s));
        return v.real();
    };
    return {real_part(r.val, "r(t)"), real_part(th.val, "theta(t)"), real_part(r.dr, "r'(t)"),
            real_part(th.dr, "theta'(t)")};
}

CurveSample CurvePiece::at(double t) const {
    if (!reversed_) return base_at(t);
    CurveSample s = base_at(t0_ + t1_ - t);
    s.dr = -s.dr;
    s.dtheta = -s.dtheta;
    return s;
}

PolarPoint CurvePiece::start() const {
    const CurveSample s = at(t0_);
    return PolarPoint(s.r, s.theta);
}

PolarPoint CurvePiece::end() const {
    const CurveSample s = at(t1_);
    return PolarPoint(s.r, s.theta);
}

CurvePiece CurvePiece::reversed() const {
    CurvePiece out = *this;
    out.reversed_ = !reversed_;
    return out;
}

bool CurvePiece::zero_length() const {
    if (t0_ == t1_) return true;
    if (const auto* seg = std::get_if<Segment>(&shape_))
        return seg->r1 == seg->r2 && seg->th1 == seg->th2;
    if (const auto* sp = std::get_if<LogSpiral>(&shape_))
        return sp->r1 == sp->r2 && sp->th1 == sp->th2;
    return false;
}

std::string CurvePiece::describe() const {
    const auto n = [](double v) { return format_number(v); };
    std::string body;
    if (const auto* seg = std::get_if<Segment>(&shape_)) {
        body = "segment(" + n(seg->r1) + "," + n(seg->th1) + "," + n(seg->r2) + "," + n(seg->th2) + ")";
    } else if (const auto* sp = std::get_if<LogSpiral>(&shape_)) {
        body = "spiral(" + n(sp->r1) + "," + n(sp->th1) + "," + n(sp->r2) + "," + n(sp->th2) + ")";
    } else if (const auto* arc = std::get_if<DiskArc>(&shape_)) {
        body = "arc(" + n(arc->r0) + "," + n(arc->th0) + "," + n(arc->rho) + "," + n(t0_) + "," +
               n(t1_) + ")";
    } else {
        const auto& par = std::get<Parametric>(shape_);
        body = "param(" + print(par.r, par.variable) + "; " + print(par.theta, par.variable) +
               "; " + n(t0_) + ", " + n(t1_) + ")";
    }
    return reversed_ ? "~" + body : body;
}

// ---------------------------------------------------------------------------
// Curves

Curve::Curve(std::vector<CurvePiece> pieces) : pieces_(std::move(pieces)) { validate(); }

void Curve::validate() {
    constexpr int kSamples = 257;
    std::vector<CurvePiece> kept;
    kept.reserve(pieces_.size());
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        const auto& piece = pieces_[k];
        if (piece.zero_length()) {
            warnings_.push_back("dropped zero-length piece " + std::to_string(k) + ": " +
                                piece.describe());
            continue;
        }
        for (int s = 0; s < kSamples; ++s) {
            const double t = grid_node(piece.t_begin(), piece.t_end(), s, kSamples);
            CurveSample c{};
            try {
                c = piece.at(t);
            } catch (const Error& err) {
                throw Error(ErrorCode::InvalidCurve, "piece " + std::to_string(k) + " (" +
                                                         piece.describe() + "): " + err.what());
            }
            const bool ok = c.r > 0.0 && std::isfinite(c.r) && std::isfinite(c.theta) &&
                            std::isfinite(c.dr) && std::isfinite(c.dtheta);
            if (!ok)
                throw Error(ErrorCode::InvalidCurve, "piece " + std::to_string(k) + " (" +
                                                         piece.describe() +
                                                         ") leaves H at t = " + format_number(t));
        }
        kept.push_back(piece);
    }
    if (kept.empty()) throw Error(ErrorCode::InvalidCurve, "curve has no pieces of positive length");
    for (std::size_t k = 0; k + 1 < kept.size(); ++k) {
        if (!points_coincide(kept[k].end(), kept[k + 1].start()))
            throw Error(ErrorCode::InvalidCurve, "pieces " + std::to_string(k) + " and " +
                                                     std::to_string(k + 1) + " do not join");
    }
    pieces_ = std::move(kept);
}

Curve Curve::rectangle(const Rect& rect) {
    rect.validate();
    const PolarPoint a(rect.r_min, rect.theta_min);
    const PolarPoint b(rect.r_max, rect.theta_min);
    const PolarPoint c(rect.r_max, rect.theta_max);
    const PolarPoint d(rect.r_min, rect.theta_max);
    return Curve({CurvePiece::segment(a, b), CurvePiece::segment(b, c), CurvePiece::segment(c, d),
                  CurvePiece::segment(d, a)});
}

Curve Curve::disk_boundary(const PolarPoint& center, double rho) {
    return Curve({CurvePiece::disk_arc(center, rho, 0.0, 2.0 * std::numbers::pi)});
}

PolarPoint Curve::start() const { return pieces_.front().start(); }
PolarPoint Curve::end() const { return pieces_.back().end(); }
bool Curve::closed() const { return points_coincide(start(), end()); }

Curve Curve::reversed() const {
    Curve out;
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) out.pieces_.push_back(it->reversed());
    out.warnings_ = warnings_;
    return out;
}

Curve Curve::then(const Curve& next) const {
    if (!points_coincide(end(), next.start()))
        throw Error(ErrorCode::InvalidCurve, "concatenated curves do not join");
    Curve out;
    out.pieces_ = pieces_;
    out.pieces_.insert(out.pieces_.end(), next.pieces_.begin(), next.pieces_.end());
    out.warnings_ = warnings_;
    out.warnings_.insert(out.warnings_.end(), next.warnings_.begin(), next.warnings_.end());
    return out;
}

double Curve::length() const {
    std::vector<QuadratureInterval> spans;
    for (std::size_t k = 0; k < pieces_.size(); ++k)
        spans.push_back({k, pieces_[k].t_begin(), pieces_[k].t_end()});
    const auto res = integrate_adaptive(
        [&](std::size_t k, double t) {
            const CurveSample s = pieces_[k].at(t);
            return Complex(std::hypot(s.dr, s.r * s.dtheta), 0.0);
        },
        spans, 1e-12, 200'000);
    return res.value.real();
}

std::string Curve::describe() const {
    std::string out;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        if (k) out += " + ";
        out += pieces_[k].describe();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integrals

IntegralResult line_integral(const Expression& e, const Curve& curve, double tol,
                             std::size_t max_evaluations) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    const auto& pieces = curve.pieces();
    std::vector<QuadratureInterval> spans;
    spans.reserve(pieces.size());
    for (std::size_t k = 0; k < pieces.size(); ++k)
        spans.push_back({k, pieces[k].t_begin(), pieces[k].t_end()});

    const auto res = integrate_adaptive(
        [&](std::size_t k, double t) {
            const CurveSample s = pieces[k].at(t);
            const Complex f = eval(e, PolarPoint(s.r, s.theta));
            return f * std::polar(1.0, s.theta) * Complex(s.dr, s.r * s.dtheta);
        },
        spans, tol, max_evaluations);

    const IntegralResult out{res.value, res.error, res.evaluations};
    if (!res.converged)
        throw ToleranceError(out, "line integral did not reach tolerance " + format_number(tol) +
                                      " within " + std::to_string(max_evaluations) +
                                      " evaluations (estimate " + format_number(res.error) + ")");
    return out;
}

PathCheckReport path_independence_check(const Expression& e, const Curve& first,
                                        const Curve& second, double tol) {
    if (!points_coincide(first.start(), second.start()) ||
        !points_coincide(first.end(), second.end()))
        throw Error(ErrorCode::EndpointMismatch, "paths do not share start and end points");
    PathCheckReport rep;
    rep.first = line_integral(e, first, tol);
    rep.second = line_integral(e, second, tol);
    rep.difference = std::abs(rep.first.value - rep.second.value);
    rep.pass =
        rep.difference <= 2.0 * (rep.first.error_estimate + rep.second.error_estimate) + tol;
    return rep;
}

MoreraReport morera_scan(const Expression& e, const Rect& region, int m, int n, double tol) {
    region.validate();
    if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "grid needs m, n >= 1");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

    MoreraReport rep;
    for (int i = 0; i <= 2 * m; ++i) {
        for (int j = 0; j <= 2 * n; ++j) {
            try {
                const PolarPoint p(grid_node(region.r_min, region.r_max, i, 2 * m + 1),
                                   grid_node(region.theta_min, region.theta_max, j, 2 * n + 1));
                rep.scale = std::max(rep.scale, std::abs(eval(e, p)));
            } catch (const Error&) {
                // Sampling holes only lower the scale; failing rectangles are reported below.
            }
        }
    }

    const double quad_tol = 1e-3 * tol * (1.0 + rep.scale);
    struct Cell {
        double value = 0.0;
        std::string error;
        Rect rect{};
    };
    const auto total = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
    std::vector<Cell> cells(total);
    detail::parallel_for(total, [&](std::size_t k) {
        const int i = static_cast<int>(k / n);
        const int j = static_cast<int>(k % n);
        Cell& cell = cells[k];
        cell.rect = {grid_node(region.r_min, region.r_max, i, m + 1),
                     grid_node(region.r_min, region.r_max, i + 1, m + 1),
                     grid_node(region.theta_min, region.theta_max, j, n + 1),
                     grid_node(region.theta_min, region.theta_max, j + 1, n + 1)};
        try {
            cell.value = std::abs(line_integral(e, Curve::rectangle(cell.rect), quad_tol).value);
        } catch (const Error& err) {
            cell.error = err.what();
        }
    });

    for (std::size_t k = 0; k < total; ++k) {
        const int i = static_cast<int>(k / n);
        const int j = static_cast<int>(k % n);
        const auto& cell = cells[k];
        if (!cell.error.empty()) {
            rep.skipped.push_back({i, j, cell.error});
            continue;
        }
        ++rep.evaluated;
        if (!rep.argmax || cell.value > rep.max_abs) {
            rep.max_abs = cell.value;
            rep.argmax = cell.rect;
            rep.argmax_i = i;
            rep.argmax_j = j;
        }
    }
    rep.consistent = rep.skipped.empty() && rep.evaluated > 0 &&
                     rep.max_abs <= tol * (1.0 + rep.scale);
    return rep;
}

} // namespace polar
