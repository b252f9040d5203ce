#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <numbers>

#include "polar/analysis.hpp"
#include "polar/diffcore.hpp"
#include "support.hpp"

using polar::Complex;
using polar::PolarDisk;
using polar::PolarPoint;
using namespace testing;

namespace {

const Complex I(0.0, 1.0);
const double kPi = std::numbers::pi;

PolarPoint random_point_in_disk(const PolarDisk& d) {
    const double rho = d.radius * std::sqrt(uniform(0.0, 1.0));
    const double phi = uniform(0.0, 2 * kPi);
    return PolarPoint(d.center.r() * std::exp(rho * std::cos(phi)), d.center.theta() + rho * std::sin(phi));
}

} // namespace

TEST_CASE("disk boundary points") {
    const PolarDisk d(PolarPoint(1, 0), 1.0);
    const PolarPoint p0 = polar::disk_boundary_point(d, 0.0);
    CHECK(std::abs(p0.r() - std::numbers::e) < 1e-15);
    CHECK(p0.theta() == 0.0);
    const auto pts = polar::disk_boundary(d, 8);
    REQUIRE(pts.size() == 8);
    CHECK(std::abs(pts[2].r() - 1.0) < 1e-15);
    CHECK(std::abs(pts[2].theta() - 1.0) < 1e-15);
    CHECK_THROWS_AS(polar::disk_boundary(d, 7), polar::Error);
}

TEST_CASE("disk boundary satisfies membership equality and the two-branch formula") {
    for (int n = 0; n < 20; ++n) {
        const PolarDisk d(PolarPoint(uniform(0.1, 10.0), uniform(-5, 5)), uniform(0.01, 3.0));
        for (const auto& p : polar::disk_boundary(d, 97)) {
            const double a = std::log(p.r() / d.center.r());
            const double b = p.theta() - d.center.theta();
            CHECK(std::abs(a * a + b * b - d.radius * d.radius) <= 1e-12 * std::max(1.0, d.radius * d.radius));
            const double root = std::sqrt(std::max(0.0, d.radius * d.radius - b * b));
            const double upper = d.center.r() * std::exp(root);
            const double lower = d.center.r() * std::exp(-root);
            const double gap = std::min(std::abs(p.r() - upper), std::abs(p.r() - lower));
            CHECK(gap <= 1e-6 * p.r());
        }
    }
}

TEST_CASE("disk membership") {
    const PolarDisk d(PolarPoint(2, 1), 0.5);
    CHECK(d.contains(PolarPoint(2, 1)));
    CHECK(d.contains(PolarPoint(2 * std::exp(0.3), 1.3)));
    CHECK(!d.contains(PolarPoint(2 * std::exp(0.4), 1.4)));
    CHECK_THROWS_AS(PolarDisk(PolarPoint(1, 0), 0.0), polar::Error);
}

TEST_CASE("maximal admissible radius") {
    const std::vector<PolarPoint> lower{PolarPoint(1e-6, -1), PolarPoint(1e6, -1)};
    const std::vector<PolarPoint> upper{PolarPoint(1e-6, 1), PolarPoint(1e6, 1)};
    polar::LogDomain strip;
    strip.add_component(lower, false);
    strip.add_component(upper, false);
    for (double r0 : {0.01, 1.0, 3.0, 500.0})
        CHECK(std::abs(polar::max_radius(PolarPoint(r0, 0), strip) - 1.0) <= 1e-12);
    CHECK(std::abs(polar::max_radius(PolarPoint(2, 0.25), strip) - 0.75) <= 1e-12);

    CHECK(polar::max_radius(PolarPoint(5, -1), strip) <= 1e-15);

    const PolarDisk big(PolarPoint(1, 0), 2.0);
    const auto circle = polar::disk_boundary(big, 200000);
    CHECK(std::abs(polar::max_radius(PolarPoint(1, 0), circle, true) - 2.0) <= 1e-9);

    polar::LogDomain empty;
    CHECK_THROWS_AS(polar::max_radius(PolarPoint(1, 0), empty), polar::Error);
}

TEST_CASE("max radius is monotone under shrinking the domain") {
    double previous = 1e300;
    for (double half = 2.0; half > 0.05; half *= 0.8) {
        polar::LogDomain strip;
        const std::vector<PolarPoint> lo{PolarPoint(1e-3, -half), PolarPoint(1e3, -half)};
        const std::vector<PolarPoint> hi{PolarPoint(1e-3, half), PolarPoint(1e3, half)};
        strip.add_component(lo, false);
        strip.add_component(hi, false);
        const double rho = polar::max_radius(PolarPoint(1, 0.01), strip);
        CHECK(rho <= previous);
        previous = rho;
    }
}

TEST_CASE("Taylor coefficients of L are the identity series") {
    const auto t = polar::taylor(polar::parse("L"), PolarPoint(1, 0), 4, 0.9, 256);
    REQUIRE(t.coefficients.size() == 5);
    const Complex want[] = {0.0, 1.0, 0.0, 0.0, 0.0};
    for (int k = 0; k < 5; ++k) CHECK(std::abs(t.coefficients[k] - want[k]) < 1e-10);
    const Complex v = polar::taylor_eval(t, PolarPoint(std::numbers::e, 1.0));
    CHECK(std::abs(v - Complex(1.0, 1.0)) < 1e-10);
}

TEST_CASE("Taylor coefficients of sin z at (1,0)") {
    const auto t = polar::taylor(polar::parse("sin(z)"), PolarPoint(1, 0), 1, 0.8, 256);
    CHECK(std::abs(t.coefficients[0] - std::sin(1.0)) < 1e-12);
    CHECK(std::abs(t.coefficients[1] - std::cos(1.0)) < 1e-12);

    // g(w) = sin(e^w): g''(0)/2 = (cos 1 - sin 1)/2.
    const auto t2 = polar::taylor(polar::parse("sin(z)"), PolarPoint(1, 0), 4, 0.8, 256);
    CHECK(std::abs(t2.coefficients[2] - (std::cos(1.0) - std::sin(1.0)) / 2) < 1e-12);
}

TEST_CASE("center identities for the catalog") {
    for (const auto& k : known_functions()) {
        const auto e = polar::parse(k.source);
        for (const PolarPoint c : {PolarPoint(1, 0), PolarPoint(2, 0.7), PolarPoint(0.5, -1.2)}) {
            const auto t = polar::taylor(e, c, 6, 0.3, 256);
            const Complex f = k.value(c.r(), c.theta());
            const Complex a1 = std::polar(c.r(), c.theta()) * k.dpol(c.r(), c.theta());
            INFO(k.name);
            CHECK(std::abs(t.coefficients[0] - f) <= 1e-10 * std::max(1.0, std::abs(f)));
            CHECK(std::abs(t.coefficients[1] - a1) <= 1e-8 * std::max(1.0, std::abs(a1)));
        }
    }
}

TEST_CASE("partial sums match direct evaluation") {
    const auto e = polar::parse("sin(z)");
    const auto t = polar::taylor(e, PolarPoint(1, 0), 16, 0.8, 256);
    CHECK(std::abs(polar::taylor_eval(t, PolarPoint(1.1, 0.1)) - polar::eval(e, PolarPoint(1.1, 0.1))) < 1e-8);
}

TEST_CASE("partial sums converge geometrically") {
    const auto e = polar::parse("exp(z)");
    const PolarPoint p(std::exp(0.2), 0.15);
    const Complex exact = polar::eval(e, p);
    double prev = 1e300;
    for (int K : {2, 4, 6, 8, 10}) {
        const auto t = polar::taylor(e, PolarPoint(1, 0), K, 0.8, 256);
        const double err = std::abs(polar::taylor_eval(t, p) - exact);
        CHECK(err < 0.5 * prev);
        prev = err;
    }
}

TEST_CASE("alternative sine expansion") {
    CHECK(std::abs(polar::sin_alternative_expansion(PolarPoint(1, 0), 20) - std::sin(1.0)) < 1e-15);
    CHECK(std::abs(polar::sin_alternative_expansion(PolarPoint(1, kPi / 2), 20) - I * std::sinh(1.0)) < 1e-12);
    CHECK(std::abs(polar::sin_alternative_expansion(PolarPoint(1, 0), 0) - 1.0) < 1e-15);
}

TEST_CASE("contour expansion agrees with the alternative sine series") {
    const auto t = polar::taylor(polar::parse("sin(z)"), PolarPoint(1, 0), 24, 1.0, 256);
    const PolarDisk d(PolarPoint(1, 0), 0.8);
    for (int n = 0; n < 50; ++n) {
        const PolarPoint p = random_point_in_disk(d);
        CHECK(std::abs(polar::taylor_eval(t, p) - polar::sin_alternative_expansion(p, 24)) < 1e-8);
    }
}

TEST_CASE("coefficients are stable under doubling the sample count") {
    for (const auto& k : known_functions()) {
        const auto e = polar::parse(k.source);
        const auto a = polar::taylor(e, PolarPoint(1.3, 0.4), 12, 0.5, 256);
        const auto b = polar::taylor(e, PolarPoint(1.3, 0.4), 12, 0.5, 512);
        for (std::size_t j = 0; j < a.coefficients.size(); ++j) {
            INFO(k.name << " k=" << j);
            CHECK(std::abs(a.coefficients[j] - b.coefficients[j]) <= 1e-10 * (1 + std::abs(a.coefficients[j])));
        }
    }
}

TEST_CASE("degenerate order and argument checks") {
    const auto e = polar::parse("exp(z)");
    const auto t0 = polar::taylor(e, PolarPoint(2, 0.5), 0, 0.5, 256);
    REQUIRE(t0.coefficients.size() == 1);
    CHECK(t0.coefficients[0] == polar::eval(e, PolarPoint(2, 0.5)));
    CHECK_THROWS_AS(polar::taylor(e, PolarPoint(1, 0), 4, 0.5, 100), polar::Error);
    CHECK_THROWS_AS(polar::taylor(e, PolarPoint(1, 0), 100, 0.5, 256), polar::Error);
    CHECK_THROWS_AS(polar::taylor(e, PolarPoint(1, 0), 4, -1.0, 256), polar::Error);
    CHECK(polar::default_sample_count(8) == 256);
    CHECK(polar::default_sample_count(100) == 512);
}

TEST_CASE("non-analytic input is rejected by the pre-scan") {
    try {
        polar::taylor(polar::parse("r"), PolarPoint(1, 0), 4, 0.5, 256);
        FAIL("no error");
    } catch (const polar::Error& e) {
        CHECK(e.code() == polar::ErrorCode::NotPolarAnalytic);
    }
}

TEST_CASE("tail estimate and JSON form") {
    const auto t = polar::taylor(polar::parse("sin(z)"), PolarPoint(1, 0), 8, 0.8, 256);
    CHECK(std::abs(t.tail_estimate - std::abs(t.coefficients[8]) * std::pow(0.8, 8)) < 1e-18);
    const auto j = nlohmann::json::parse(polar::to_json(t));
    CHECK(j["center"]["r"] == 1.0);
    CHECK(j["center"]["theta"] == 0.0);
    CHECK(j["rho_sample"] == 0.8);
    CHECK(j["coefficients"].size() == 9);
    CHECK(j["coefficients"][1][0].get<double>() == t.coefficients[1].real());
    CHECK(j["tail_estimate"].get<double>() == t.tail_estimate);
}
