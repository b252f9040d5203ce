#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polar/diffcore.hpp"
#include "polar/geometry.hpp"
#include "support.hpp"

using polar::Complex;
using polar::PolarPoint;
using namespace testing;

namespace {

const double kPi = std::numbers::pi;

// Unsigned angle between two plane vectors through arccos, as an independent oracle.
double arccos_angle(double x1, double y1, double x2, double y2) {
    const double c = (x1 * x2 + y1 * y2) / (std::hypot(x1, y1) * std::hypot(x2, y2));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

// Tangent form of cos beta, written out here independently of the library.
double cos_beta_tangent_oracle(double r0, double t1, double t2) {
    const double s = r0 * r0;
    return (1 + s * t1 * t2) / std::sqrt((1 + s * t1 * t1) * (1 + s * t2 * t2));
}

} // namespace

TEST_CASE("Jacobian examples") {
    const auto j = polar::jacobian(polar::parse("z"), PolarPoint(1, 0));
    CHECK(std::abs(j.a11 - 1) < 1e-15);
    CHECK(std::abs(j.a12) < 1e-15);
    CHECK(std::abs(j.a21) < 1e-15);
    CHECK(std::abs(j.a22 - 1) < 1e-15);
    const auto k = polar::jacobian(polar::parse("exp(-i*theta)/r"), PolarPoint(1, 0));
    CHECK(std::abs(k.a11 + 1) < 1e-15);
    CHECK(std::abs(k.a12) < 1e-15);
    CHECK(std::abs(k.a21) < 1e-15);
    CHECK(std::abs(k.a22 + 1) < 1e-15);
}

TEST_CASE("Jacobian determinant identity") {
    for (const auto& f : known_functions()) {
        const auto e = polar::parse(f.source);
        for (int n = 0; n < 200; ++n) {
            const PolarPoint p(uniform(0.2, 3.0), uniform(-3.0, 3.0));
            const auto j = polar::jacobian(e, p);
            const double want = p.r() * std::norm(polar::eval_dual(e, p).dr);
            INFO(f.name);
            CHECK(j.det() >= 0.0);
            CHECK(std::abs(j.det() - want) <= 1e-10 * std::max(1e-300, want));
        }
    }
}

TEST_CASE("Jacobian linearizes f") {
    for (const auto& f : known_functions()) {
        const auto e = polar::parse(f.source);
        const PolarPoint p(1.3, 0.4);
        const Complex f0 = polar::eval(e, p);
        const auto j = polar::jacobian(e, p);
        double prev_ratio = 1e300;
        for (double h = 1e-2; h > 1e-4; h /= 2) {
            const double dr = 0.6 * h, dth = -0.8 * h;
            const Complex rem = polar::eval(e, PolarPoint(p.r() + dr, p.theta() + dth)) - f0 - j.apply(dr, dth);
            const double ratio = std::abs(rem) / h;
            INFO(f.name << " h=" << h);
            CHECK(ratio < 0.6 * prev_ratio + 1e-9);
            prev_ratio = ratio;
        }
    }
}

TEST_CASE("pre-image angle") {
    CHECK(std::abs(polar::angle_alpha(0.0, kPi / 2) - kPi / 2) < 1e-15);
    CHECK(std::abs(polar::angle_alpha(0.3, 1.1) - 0.8) < 1e-15);
    CHECK(polar::angle_alpha(0.7, 0.7) == 0.0);
    for (int n = 0; n < 100; ++n) {
        const double a = uniform(-kPi / 2 + 1e-9, kPi / 2);
        const double b = uniform(-kPi / 2 + 1e-9, kPi / 2);
        CHECK(std::abs(std::cos(polar::angle_alpha(a, b)) - std::cos(b - a)) < 1e-14);
    }
    CHECK_THROWS_AS(polar::angle_alpha(2.0, 0.0), polar::Error);
    CHECK_THROWS_AS(polar::angle_alpha(-kPi / 2, 0.0), polar::Error);
}

TEST_CASE("image angle examples") {
    for (int n = 0; n < 100; ++n) {
        const double a = uniform(-1.5, kPi / 2);
        const double b = uniform(-1.5, kPi / 2);
        CHECK(std::abs(polar::angle_beta(1.0, a, b) - polar::angle_alpha(a, b)) <= 1e-12);
    }
    CHECK(std::abs(polar::angle_beta(7.0, 0.0, kPi / 2) - kPi / 2) < 1e-15);
    CHECK(std::abs(polar::angle_beta(1e6, -kPi / 4, kPi / 4) - kPi) < 1e-3);
    CHECK(polar::angle_beta(1e6, -kPi / 4, kPi / 4) < kPi);
    CHECK_THROWS_AS(polar::angle_beta(0.0, 0.1, 0.2), polar::Error);
}

TEST_CASE("closed forms of cos beta agree with an arccos oracle") {
    for (int n = 0; n < 200; ++n) {
        const double r0 = std::exp(uniform(-5, 5));
        const double a = uniform(-1.5, 1.5);
        const double b = uniform(-1.5, 1.5);
        const double want = arccos_angle(std::cos(a), r0 * std::sin(a), std::cos(b), r0 * std::sin(b));
        CHECK(std::abs(polar::angle_beta(r0, a, b) - want) < 1e-7);
        const double cb = polar::cos_beta(r0, a, b);
        CHECK(std::abs(cb - polar::cos_beta_from_tangents(r0, std::tan(a), std::tan(b))) <= 1e-12);
        CHECK(std::abs(cb - cos_beta_tangent_oracle(r0, std::tan(a), std::tan(b))) <= 1e-12);
    }
}

TEST_CASE("image angle via the Jacobian") {
    const auto sinz = polar::parse("sin(z)");
    CHECK(std::abs(polar::angle_beta_via_jacobian(sinz, PolarPoint(2, 0.7), 0.2, 1.0) -
                   polar::angle_beta(2, 0.2, 1.0)) <= 1e-10);
    const auto sq = polar::parse("z^2");
    for (double th : {-2.0, 0.0, 0.5, 3.0})
        CHECK(std::abs(polar::angle_beta_via_jacobian(sq, PolarPoint(1, th), -0.4, 0.9) -
                       polar::angle_alpha(-0.4, 0.9)) <= 1e-12);
    try {
        polar::angle_beta_via_jacobian(polar::parse("2 + i"), PolarPoint(1, 0), 0.1, 0.5);
        FAIL("no error");
    } catch (const polar::Error& e) {
        CHECK(e.code() == polar::ErrorCode::VanishingDerivative);
    }
}

TEST_CASE("image angle is independent of f and theta0") {
    const double r0 = 1.7;
    for (int n = 0; n < 20; ++n) {
        const double a = uniform(-1.5, 1.5);
        const double b = uniform(-1.5, 1.5);
        const double closed = polar::angle_beta(r0, a, b);
        for (const auto& f : known_functions()) {
            const auto e = polar::parse(f.source);
            for (double th : {-1.0, 0.0, 0.4, 2.5}) {
                INFO(f.name);
                CHECK(std::abs(polar::angle_beta_via_jacobian(e, PolarPoint(r0, th), a, b) - closed) <= 1e-10);
            }
        }
    }
}

TEST_CASE("horizontal against tilted direction") {
    const double alpha = 0.9;
    CHECK(polar::angle_beta(1e-6, 0.0, alpha) < 1e-5);
    CHECK(std::abs(polar::angle_beta(1.0, 0.0, alpha) - alpha) < 1e-15);
    CHECK(std::abs(polar::angle_beta(1e6, 0.0, alpha) - kPi / 2) < 1e-5);
    double prev = -1.0;
    for (int k = 0; k < 60; ++k) {
        const double r0 = std::exp(-8.0 + 16.0 * k / 59.0);
        const double b = polar::angle_beta(r0, 0.0, alpha);
        CHECK(b > prev);
        prev = b;
    }
    for (double r0 : {1e-6, 1.0, 1e6})
        CHECK(std::abs(polar::angle_beta(r0, 0.0, kPi / 2) - kPi / 2) < 1e-15);
}

TEST_CASE("beta profile classification") {
    const auto inc = polar::beta_profile(1.0, -1.0);
    CHECK(inc.kind == polar::BetaProfile::Kind::Increasing);
    CHECK(!inc.r0_star);
    CHECK(inc.beta_limit_at_zero == 0.0);
    CHECK(std::abs(inc.beta_limit_at_infinity - kPi) < 1e-15);
    CHECK(!inc.constant);

    const auto eq = polar::beta_profile(2.0, 2.0);
    CHECK(eq.kind == polar::BetaProfile::Kind::MinimumAt);
    REQUIRE(eq.r0_star);
    CHECK(std::abs(*eq.r0_star - 0.5) < 1e-15);
    CHECK(eq.constant);

    const auto pos = polar::beta_profile(0.5, 3.0);
    REQUIRE(pos.r0_star);
    CHECK(std::abs(*pos.r0_star - 1 / std::sqrt(1.5)) < 1e-15);
    CHECK(!pos.constant);

    try {
        polar::beta_profile_from_angles(kPi / 2, 0.3);
        FAIL("no error");
    } catch (const polar::Error& e) {
        CHECK(e.code() == polar::ErrorCode::TangentUndefined);
    }
    CHECK(std::string(polar::to_string(polar::BetaProfile::Kind::MinimumAt)) == "min_at");
}

TEST_CASE("slope sign matches a finite-difference scan of C") {
    const double pairs[][2] = {{2.0, 0.5}, {1.0, -1.0}, {0.3, 4.0}, {-2.0, -0.7}, {0.0, 1.5}, {3.0, 0.01}};
    for (const auto& pr : pairs) {
        const double t1 = pr[0], t2 = pr[1];
        for (int k = 0; k < 60; ++k) {
            const double r0 = std::exp(-4.0 + 8.0 * k / 59.0);
            const double s = r0 * r0;
            const double h = 1e-6 * s;
            auto C = [&](double ss) { return cos_beta_tangent_oracle(std::sqrt(ss), t1, t2); };
            const double slope = (C(s + h) - C(s - h)) / (2 * h);
            const int want = std::abs(slope) < 1e-7 ? 0 : (slope > 0 ? 1 : -1);
            const int got = polar::cos_beta_slope_sign(r0, t1, t2);
            INFO("t1=" << t1 << " t2=" << t2 << " r0=" << r0 << " slope=" << slope);
            if (want != 0) CHECK(got == want);
        }
    }
    CHECK(polar::cos_beta_slope_sign(0.5, 2.0, 2.0) == 0);
    CHECK(polar::cos_beta_slope_sign(1.0, 2.0, 0.5) == 0);
}

TEST_CASE("coordinate net images") {
    const auto f = polar::parse("exp(-i*theta)/r");
    const std::vector<double> rs{0.5, 1.0, 2.0};
    const std::vector<double> ths{-1.0, 0.0, 1.0, 2.0};
    const auto net = polar::map_net(f, rs, ths, 64);
    REQUIRE(net.curves.size() == 7);
    for (const auto& c : net.curves) {
        CHECK(!c.truncated);
        CHECK(c.image.size() == 64);
        for (const auto& w : c.image) {
            if (c.family == polar::NetCurve::Family::RLine)
                CHECK(std::abs(std::abs(w) - 1.0 / c.value) <= 1e-12);
            else
                CHECK(std::abs(std::arg(w) + c.value) <= 1e-12);
        }
    }
    CHECK(net.curves[0].id == "r=0.5");
    CHECK(net.curves[3].id == "theta=-1");
    CHECK(net.intersections.size() == 12);
    CHECK(net.max_abs_inner <= 1e-6);

    for (const char* src : {"sin(z)", "z^2"}) {
        const auto n2 = polar::map_net(polar::parse(src), std::vector<double>{0.5, 1.2, 2.0},
                                       std::vector<double>{-0.5, 0.3, 1.0}, 32);
        INFO(src);
        CHECK(n2.max_abs_inner <= 1e-6);
        for (const auto& x : n2.intersections) CHECK(x.det_j > 0.0);
    }
    CHECK_THROWS_AS(polar::map_net(f, rs, ths, 8), polar::Error);
    CHECK_THROWS_AS(polar::map_net(f, std::vector<double>{-1.0}, ths, 32), polar::Error);
}

TEST_CASE("net output formats") {
    const auto net = polar::map_net(polar::parse("z^2"), std::vector<double>{1.0},
                                    std::vector<double>{0.0}, 16);
    const std::string csv = polar::net_to_csv(net);
    CHECK(csv.rfind("curve_id,t,re,im\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 33);
    const std::string svg = polar::net_to_svg(net);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("width=\"1000\"") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
}

TEST_CASE("vanishing derivative is flagged at net intersections") {
    // d/dr of r^2 e^{2 i theta} - 2 r e^{i theta} vanishes at r = 1, theta = 0.
    const auto net = polar::map_net(polar::parse("z^2 - 2*z"), std::vector<double>{1.0, 2.0},
                                    std::vector<double>{0.0, 0.5}, 32);
    bool flagged = false;
    for (const auto& x : net.intersections)
        if (x.point == PolarPoint(1.0, 0.0)) flagged = x.dpol_vanishes;
    CHECK(flagged);
}
