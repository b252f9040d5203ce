#include "polar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polar/diffcore.hpp"
#include "polar/plot.hpp"

namespace polar {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_direction(double phi) {
    if (!(phi > -kHalfPi && phi <= kHalfPi))
        throw Error(ErrorCode::InvalidArgument, "direction angle must lie in (-pi/2, pi/2]");
}

// (cos phi, sin phi), with the vertical direction phi = pi/2 made exact.
std::pair<double, double> direction(double phi) {
    if (phi == kHalfPi) return {0.0, 1.0};
    return {std::cos(phi), std::sin(phi)};
}

double unsigned_angle(double x1, double y1, double x2, double y2) {
    return std::atan2(std::abs(x1 * y2 - y1 * x2), x1 * x2 + y1 * y2);
}

void require_radius(double r0) {
    if (!(r0 > 0.0) || !std::isfinite(r0))
        throw Error(ErrorCode::Domain, "r0 must be positive and finite");
}

} // namespace

Jacobian2 jacobian(const Expression& e, const PolarPoint& p) {
    const Dual1 d = eval_dual(e, p);
    const double ur = d.dr.real();
    const double vr = d.dr.imag();
    return {ur, -p.r() * vr, vr, p.r() * ur};
}

double angle_alpha(double phi1, double phi2) {
    require_direction(phi1);
    require_direction(phi2);
    const auto [c1, s1] = direction(phi1);
    const auto [c2, s2] = direction(phi2);
    return unsigned_angle(c1, s1, c2, s2);
}

double cos_beta(double r0, double phi1, double phi2) {
    require_radius(r0);
    require_direction(phi1);
    require_direction(phi2);
    const auto [c1, s1] = direction(phi1);
    const auto [c2, s2] = direction(phi2);
    const double r2 = r0 * r0;
    return (c1 * c2 + r2 * s1 * s2) /
           (std::sqrt(c1 * c1 + r2 * s1 * s1) * std::sqrt(c2 * c2 + r2 * s2 * s2));
}

double cos_beta_from_tangents(double r0, double t1, double t2) {
    require_radius(r0);
    const double r2 = r0 * r0;
    return (1.0 + r2 * t1 * t2) / (std::sqrt(1.0 + r2 * t1 * t1) * std::sqrt(1.0 + r2 * t2 * t2));
}

// Same quotient as cos_beta, evaluated as atan2(|cross|, dot) of the vectors
// (c_j, r0 s_j) to stay accurate near 0 and pi.
double angle_beta(double r0, double phi1, double phi2) {
    require_radius(r0);
    require_direction(phi1);
    require_direction(phi2);
    const auto [c1, s1] = direction(phi1);
    const auto [c2, s2] = direction(phi2);
    return unsigned_angle(c1, r0 * s1, c2, r0 * s2);
}

double angle_beta_via_jacobian(const Expression& e, const PolarPoint& p, double phi1,
                               double phi2) {
    require_direction(phi1);
    require_direction(phi2);
    const Dual1 d = eval_dual(e, p);
    if (std::abs(d.dr) <= 1e-12 * std::max(1.0, std::abs(d.val)))
        throw Error(ErrorCode::VanishingDerivative,
                    "polar derivative vanishes at (" + format_number(p.r()) + ", " +
                        format_number(p.theta()) + "); the image angle is undefined");
    const Jacobian2 j{d.dr.real(), -p.r() * d.dr.imag(), d.dr.imag(), p.r() * d.dr.real()};
    const auto [c1, s1] = direction(phi1);
    const auto [c2, s2] = direction(phi2);
    const Complex v1 = j.apply(c1, s1);
    const Complex v2 = j.apply(c2, s2);
    return unsigned_angle(v1.real(), v1.imag(), v2.real(), v2.imag());
}

AngleReport angle_report(double r0, double phi1, double phi2) {
    return {angle_alpha(phi1, phi2), angle_beta(r0, phi1, phi2), r0, phi1, phi2};
}

int cos_beta_slope_sign(double r0, double t1, double t2) {
    require_radius(r0);
    // dC/ds = (t1 - t2)^2 (s t1 t2 - 1) / (2 ((1 + s t1^2)(1 + s t2^2))^{3/2}), s = r0^2.
    if (t1 == t2) return 0;
    const double q = r0 * r0 * t1 * t2;
    return q < 1.0 ? -1 : (q > 1.0 ? 1 : 0);
}

BetaProfile beta_profile(double t1, double t2) {
    if (!std::isfinite(t1) || !std::isfinite(t2))
        throw Error(ErrorCode::TangentUndefined, "tangent of a vertical direction is undefined");
    BetaProfile out{};
    out.t1 = t1;
    out.t2 = t2;
    out.constant = t1 == t2;
    const double product = t1 * t2;
    if (product > 0.0) {
        out.kind = BetaProfile::Kind::MinimumAt;
        out.r0_star = 1.0 / std::sqrt(product);
    } else {
        out.kind = BetaProfile::Kind::Increasing;
    }
    out.beta_limit_at_zero = 0.0;
    // As r0 grows, (1, r0 t) turns towards (0, sign t) unless t == 0.
    auto limit_dir = [](double t) -> std::pair<double, double> {
        if (t == 0.0) return {1.0, 0.0};
        return {0.0, t > 0.0 ? 1.0 : -1.0};
    };
    const auto [x1, y1] = limit_dir(t1);
    const auto [x2, y2] = limit_dir(t2);
    out.beta_limit_at_infinity = out.constant ? 0.0 : unsigned_angle(x1, y1, x2, y2);
    return out;
}

BetaProfile beta_profile_from_angles(double phi1, double phi2) {
    require_direction(phi1);
    require_direction(phi2);
    if (phi1 == kHalfPi || phi2 == kHalfPi)
        throw Error(ErrorCode::TangentUndefined,
                    "tan(pi/2) is undefined; use the phi1 = 0, phi2 = alpha analysis "
                    "(beta = pi/2 for every r0 when alpha = pi/2)");
    return beta_profile(std::tan(phi1), std::tan(phi2));
}

const char* to_string(BetaProfile::Kind kind) noexcept {
    switch (kind) {
    case BetaProfile::Kind::Increasing: return "increasing";
    case BetaProfile::Kind::MinimumAt: return "min_at";
    }
    return "?";
}

// ---------------------------------------------------------------------------

namespace {

std::pair<double, double> extent(std::span<const double> values, bool radial) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo < *hi) return {*lo, *hi};
    if (radial) return {*lo / std::numbers::e, *lo * std::numbers::e};
    return {*lo - 1.0, *lo + 1.0};
}

// Tangent step: 1e-5 of the parameter range.
constexpr double kTangentStep = 1e-5;

} // namespace

NetReport map_net(const Expression& e, std::span<const double> r_values,
                  std::span<const double> theta_values, int samples_per_curve) {
    if (samples_per_curve < 16)
        throw Error(ErrorCode::InvalidArgument, "net curves need at least 16 samples");
    if (r_values.empty() || theta_values.empty())
        throw Error(ErrorCode::InvalidArgument, "net needs at least one r-line and one theta-line");
    for (double r : r_values)
        if (!(r > 0.0) || !std::isfinite(r))
            throw Error(ErrorCode::Domain, "r-lines must have positive r");
    for (double th : theta_values)
        if (!std::isfinite(th)) throw Error(ErrorCode::Domain, "theta-lines must be finite");

    NetReport net{};
    std::tie(net.theta_lo, net.theta_hi) = extent(theta_values, false);
    std::tie(net.r_lo, net.r_hi) = extent(r_values, true);

    auto trace = [&](NetCurve::Family family, double value, double lo, double hi) {
        NetCurve c{family, value, {}, {}, {}, std::nullopt};
        c.id = (family == NetCurve::Family::RLine ? "r=" : "theta=") + format_number(value);
        for (int k = 0; k < samples_per_curve; ++k) {
            const double s = grid_node(lo, hi, k, samples_per_curve);
            try {
                const PolarPoint p = family == NetCurve::Family::RLine ? PolarPoint(value, s)
                                                                       : PolarPoint(s, value);
                c.image.push_back(eval(e, p));
                c.params.push_back(s);
            } catch (const Error& err) {
                c.truncated = "evaluation failed at " + format_number(s) + ": " + err.what();
                break;
            }
        }
        return c;
    };
    for (double a : r_values)
        net.curves.push_back(trace(NetCurve::Family::RLine, a, net.theta_lo, net.theta_hi));
    for (double b : theta_values)
        net.curves.push_back(trace(NetCurve::Family::ThetaLine, b, net.r_lo, net.r_hi));

    const double dth = kTangentStep * (net.theta_hi - net.theta_lo);
    const double dr = kTangentStep * (net.r_hi - net.r_lo);
    for (std::size_t i = 0; i < r_values.size(); ++i) {
        for (std::size_t j = 0; j < theta_values.size(); ++j) {
            const double a = r_values[i];
            const double b = theta_values[j];
            NetIntersection x{PolarPoint(a, b), i, r_values.size() + j, {}, {}, {}, 0.0, 0.0, false, {}};
            try {
                const Dual1 d = eval_dual(e, x.point);
                x.image = d.val;
                x.det_j = a * std::norm(d.dr);
                x.dpol_vanishes = std::abs(d.dr) <= 1e-12 * std::max(1.0, std::abs(d.val));
                x.tangent_r_line =
                    (eval(e, PolarPoint(a, b + dth)) - eval(e, PolarPoint(a, b - dth))) / (2.0 * dth);
                if (a - dr > 0.0) {
                    x.tangent_theta_line =
                        (eval(e, PolarPoint(a + dr, b)) - eval(e, PolarPoint(a - dr, b))) / (2.0 * dr);
                } else {
                    x.tangent_theta_line = (eval(e, PolarPoint(a + dr, b)) - d.val) / dr;
                }
                const double n1 = std::abs(x.tangent_r_line);
                const double n2 = std::abs(x.tangent_theta_line);
                if (n1 > 0.0 && n2 > 0.0) {
                    x.normalized_inner =
                        (std::conj(x.tangent_r_line) * x.tangent_theta_line).real() / (n1 * n2);
                }
                if (!x.dpol_vanishes)
                    net.max_abs_inner = std::max(net.max_abs_inner, std::abs(x.normalized_inner));
            } catch (const Error& err) {
                x.error = err.what();
            }
            net.intersections.push_back(std::move(x));
        }
    }
    return net;
}

std::string net_to_csv(const NetReport& net) {
    std::string out = "curve_id,t,re,im\n";
    for (const auto& c : net.curves) {
        for (std::size_t k = 0; k < c.image.size(); ++k) {
            out += c.id + "," + format_number(c.params[k]) + "," + format_number(c.image[k].real()) +
                   "," + format_number(c.image[k].imag()) + "\n";
        }
    }
    return out;
}

std::string net_to_svg(const NetReport& net) {
    std::vector<SvgPolyline> lines;
    for (const auto& c : net.curves) {
        SvgPolyline pl;
        pl.stroke = c.family == NetCurve::Family::RLine ? "#1f77b4" : "#d62728";
        for (const auto& w : c.image) pl.points.emplace_back(w.real(), w.imag());
        lines.push_back(std::move(pl));
    }
    return render_svg(lines);
}

} // namespace polar
