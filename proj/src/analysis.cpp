#include "polar/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "parallel.hpp"
#include "polar/diffcore.hpp"

namespace polar {

LogPoint to_log(const PolarPoint& p) { return {std::log(p.r()), p.theta()}; }
PolarPoint from_log(const LogPoint& q) { return PolarPoint(std::exp(q.x), q.y); }

PolarDisk::PolarDisk(PolarPoint c, double rho) : center(c), radius(rho) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw Error(ErrorCode::InvalidArgument, "polar-disk radius must be positive");
}

double PolarDisk::log_distance(const PolarPoint& p) const {
    return std::hypot(std::log(p.r() / center.r()), p.theta() - center.theta());
}

PolarPoint disk_boundary_point(const PolarDisk& d, double phi) {
    return PolarPoint(d.center.r() * std::exp(d.radius * std::cos(phi)),
                      d.center.theta() + d.radius * std::sin(phi));
}

std::vector<PolarPoint> disk_boundary(const PolarDisk& d, int m) {
    if (m < 8) throw Error(ErrorCode::InvalidArgument, "disk boundary needs at least 8 samples");
    std::vector<PolarPoint> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        out.push_back(disk_boundary_point(d, 2.0 * std::numbers::pi * k / m));
    return out;
}

// ---------------------------------------------------------------------------

void LogDomain::add_component(std::span<const PolarPoint> polyline, bool closed) {
    if (polyline.empty()) throw Error(ErrorCode::EmptyBoundary, "boundary component is empty");
    Component c;
    c.closed = closed;
    c.vertices.reserve(polyline.size());
    for (const auto& p : polyline) c.vertices.push_back(to_log(p));
    components_.push_back(std::move(c));
}

namespace {

double point_segment_distance(LogPoint p, LogPoint a, LogPoint b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

} // namespace

double LogDomain::distance_to_boundary(const PolarPoint& p) const {
    if (components_.empty()) throw Error(ErrorCode::EmptyBoundary, "boundary is empty");
    const LogPoint q = to_log(p);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : components_) {
        const auto& v = c.vertices;
        if (v.size() == 1) {
            best = std::min(best, std::hypot(q.x - v[0].x, q.y - v[0].y));
            continue;
        }
        for (std::size_t k = 0; k + 1 < v.size(); ++k)
            best = std::min(best, point_segment_distance(q, v[k], v[k + 1]));
        if (c.closed) best = std::min(best, point_segment_distance(q, v.back(), v.front()));
    }
    return best;
}

double max_radius(const PolarPoint& center, std::span<const PolarPoint> boundary, bool closed) {
    if (boundary.empty()) throw Error(ErrorCode::EmptyBoundary, "boundary is empty");
    LogDomain domain;
    domain.add_component(boundary, closed);
    return domain.distance_to_boundary(center);
}

double max_radius(const PolarPoint& center, const LogDomain& domain) {
    return domain.distance_to_boundary(center);
}

// ---------------------------------------------------------------------------

int default_sample_count(int order) {
    int n = 1;
    while (n < 4 * order) n <<= 1;
    return std::max(256, n);
}

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Pre-scan on 64 boundary points and 16 interior points (two rings of 8).
void require_analytic_on_disk(const Expression& e, const PolarPoint& center, double rho) {
    const LogPoint c = to_log(center);
    std::vector<LogPoint> nodes;
    nodes.reserve(80);
    for (int k = 0; k < 64; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / 64.0;
        nodes.push_back({c.x + rho * std::cos(phi), c.y + rho * std::sin(phi)});
    }
    for (int ring = 1; ring <= 2; ++ring) {
        const double s = rho * ring / 3.0;
        for (int k = 0; k < 8; ++k) {
            const double phi = 2.0 * std::numbers::pi * (k + 0.5 * ring) / 8.0;
            nodes.push_back({c.x + s * std::cos(phi), c.y + s * std::sin(phi)});
        }
    }
    for (const auto& q : nodes) {
        const PolarPoint p = from_log(q);
        const Dual1 d = eval_dual(e, p);
        const double res = std::abs(d.dtheta - Complex(0.0, p.r()) * d.dr);
        if (res > kAnalyticTolerance * local_scale(d, p.r())) {
            throw Error(ErrorCode::NotPolarAnalytic,
                        "polar Cauchy-Riemann residual " + format_number(res) + " at (" +
                            format_number(p.r()) + ", " + format_number(p.theta()) +
                            ") on the sampling disk");
        }
    }
}

} // namespace

TaylorExpansion taylor(const Expression& e, const PolarPoint& center, int order,
                       double sample_radius, int samples) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be non-negative");
    if (order == 0) {
        const Complex a0 = eval(e, center);
        return {center, {a0}, sample_radius, 1, std::abs(a0)};
    }
    if (!(sample_radius > 0.0) || !std::isfinite(sample_radius))
        throw Error(ErrorCode::InvalidArgument, "sample radius must be positive");
    if (!power_of_two(samples) || samples < 4 * order)
        throw Error(ErrorCode::InvalidArgument,
                    "sample count must be a power of two and at least 4 * order");

    require_analytic_on_disk(e, center, sample_radius);

    const LogPoint c = to_log(center);
    const auto n = static_cast<std::size_t>(samples);
    std::vector<Complex> g(n);
    std::vector<std::string> errors(n);
    detail::parallel_for(n, [&](std::size_t m) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(m) / samples;
        try {
            const PolarPoint p(std::exp(c.x + sample_radius * std::cos(phi)),
                               c.y + sample_radius * std::sin(phi));
            g[m] = eval(e, p);
        } catch (const Error& err) {
            errors[m] = err.what();
        }
    });
    for (std::size_t m = 0; m < n; ++m) {
        if (!errors[m].empty())
            throw Error(ErrorCode::Domain, "evaluation failed at sample node " +
                                               std::to_string(m) + ": " + errors[m]);
    }

    TaylorExpansion t{center, {}, sample_radius, samples, 0.0};
    t.coefficients.resize(static_cast<std::size_t>(order) + 1);
    double rho_k = 1.0;
    for (int k = 0; k <= order; ++k) {
        Complex sum = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const auto km = (static_cast<std::size_t>(k) * m) % n;
            sum += g[m] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(km) /
                                              static_cast<double>(samples));
        }
        t.coefficients[static_cast<std::size_t>(k)] = sum / (static_cast<double>(samples) * rho_k);
        if (k < order) rho_k *= sample_radius;
    }
    t.tail_estimate = std::abs(t.coefficients.back()) * rho_k;
    return t;
}

Complex taylor_eval(const TaylorExpansion& t, const PolarPoint& p) {
    const Complex w(std::log(p.r() / t.center.r()), p.theta() - t.center.theta());
    Complex acc = 0.0;
    for (auto it = t.coefficients.rbegin(); it != t.coefficients.rend(); ++it) acc = acc * w + *it;
    return acc;
}

Complex sin_alternative_expansion(const PolarPoint& p, int order) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be non-negative");
    const Complex z = std::polar(p.r(), p.theta());
    const Complex z2 = z * z;
    Complex term = z; // (-1)^k z^{2k+1} / (2k+1)!
    Complex sum = term;
    for (int k = 1; k <= order; ++k) {
        term *= -z2 / static_cast<double>((2 * k) * (2 * k + 1));
        sum += term;
    }
    return sum;
}

std::string to_json(const TaylorExpansion& t) {
    nlohmann::ordered_json j;
    j["center"] = {{"r", t.center.r()}, {"theta", t.center.theta()}};
    j["rho_sample"] = t.sample_radius;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& a : t.coefficients) coeffs.push_back({a.real(), a.imag()});
    j["coefficients"] = std::move(coeffs);
    j["tail_estimate"] = t.tail_estimate;
    return j.dump();
}

} // namespace polar
