#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polar/analysis.hpp"
#include "polar/mellin.hpp"
#include "support.hpp"

using polar::Complex;
using polar::MellinConstant;
using polar::PolarPoint;
using namespace testing;

namespace {

// Second derivative of g(x + iy) = f(e^x, y) at z0 by a five-point stencil along x.
Complex g_second_fd(const polar::Expression& e, const PolarPoint& p) {
    const double h = 1e-3;
    auto g = [&](double dx) { return polar::eval(e, PolarPoint(p.r() * std::exp(dx), p.theta())); };
    return (-g(2 * h) + 16.0 * g(h) - 30.0 * g(0) + 16.0 * g(-h) - g(-2 * h)) / (12 * h * h);
}

} // namespace

TEST_CASE("Mellin derivative examples") {
    CHECK(std::abs(polar::mellin_derivative(polar::parse_univariate("x^3"), MellinConstant(0), 2) - 24.0) < 1e-13);
    CHECK(std::abs(polar::mellin_derivative(polar::parse_univariate("1"), MellinConstant(1), 5) - 1.0) < 1e-15);
    CHECK(std::abs(polar::mellin_derivative(polar::parse_univariate("log(x)"), MellinConstant(0), std::numbers::e) - 1.0) < 1e-15);
    CHECK_THROWS_AS(polar::mellin_derivative(polar::parse_univariate("x"), MellinConstant(0), -1), polar::Error);
    CHECK_THROWS_AS(MellinConstant(std::nan("")), polar::Error);
}

TEST_CASE("Mellin polar-derivative examples") {
    const auto l = polar::parse("L");
    for (int n = 0; n < 20; ++n) {
        const PolarPoint p(uniform(0.1, 5), uniform(-4, 4));
        CHECK(std::abs(polar::mellin_polar_derivative(l, MellinConstant(0), p) - 1.0) < 1e-14);
    }
    const auto sq = polar::parse("z^2");
    const PolarPoint p(1.3, 0.8);
    const Complex w = std::polar(1.3, 0.8);
    CHECK(std::abs(polar::mellin_polar_derivative(sq, MellinConstant(0), p) - 2.0 * w * w) < 1e-13);
    CHECK(std::abs(polar::mellin_polar_derivative(sq, MellinConstant(1.5), p) - 3.5 * w * w) < 1e-13);
}

TEST_CASE("restriction identity on the positive axis") {
    for (const auto& k : known_functions()) {
        const auto f = polar::parse(k.source);
        const auto phi = polar::parse_univariate(k.restriction);
        for (double c : {0.0, 1.0, -2.5}) {
            for (int n = 0; n < 50; ++n) {
                const double r = uniform(0.1, 5.0);
                const Complex lhs = polar::mellin_polar_derivative(f, MellinConstant(c), PolarPoint(r, 0));
                const Complex rhs = polar::mellin_derivative(phi, MellinConstant(c), r);
                INFO(k.name << " c=" << c << " r=" << r);
                CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("operators are linear and shift by c") {
    const auto f = polar::parse("sin(z)");
    const auto g = polar::parse("exp(z)");
    const Complex a(0.3, -1.2);
    const auto h = polar::Expression::constant(a) * f + g;
    for (int n = 0; n < 20; ++n) {
        const PolarPoint p(uniform(0.3, 2.0), uniform(-2, 2));
        const double c = uniform(-3, 3);
        const Complex lhs = polar::mellin_polar_derivative(h, MellinConstant(c), p);
        const Complex rhs = a * polar::mellin_polar_derivative(f, MellinConstant(c), p) +
                            polar::mellin_polar_derivative(g, MellinConstant(c), p);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        const Complex shift = polar::mellin_polar_derivative(f, MellinConstant(0), p) + c * polar::eval(f, p);
        CHECK(std::abs(polar::mellin_polar_derivative(f, MellinConstant(c), p) - shift) <= 1e-13 * std::max(1.0, std::abs(shift)));
    }
    const auto phi = polar::parse_univariate("x^2 + sin(x)");
    const double x = 1.7, c = -0.6;
    CHECK(std::abs(polar::mellin_derivative(phi, MellinConstant(c), x) -
                   (polar::mellin_derivative(phi, MellinConstant(0), x) + c * polar::eval_at(phi, x))) < 1e-13);
}

TEST_CASE("iterated polar Mellin derivative") {
    const auto sinz = polar::parse("sin(z)");
    const PolarPoint c(1, 0);
    CHECK(polar::iterated_theta0(sinz, c, 0) == polar::eval(sinz, c));
    CHECK(std::abs(polar::iterated_theta0(sinz, c, 1) - std::cos(1.0)) < 1e-15);
    CHECK(std::abs(polar::iterated_theta0(polar::parse("L"), c, 2)) < 1e-10);
    CHECK(std::abs(polar::iterated_theta0(polar::parse("L"), c, 3)) < 1e-10);
    CHECK_THROWS_AS(polar::iterated_theta0(sinz, c, 5), polar::Error);
    CHECK_THROWS_AS(polar::iterated_theta0(sinz, c, -1), polar::Error);

    // g(w) = sin(e^w): g'' = e^w cos(e^w) - e^{2w} sin(e^w).
    CHECK(std::abs(polar::iterated_theta0(sinz, c, 2) - (std::cos(1.0) - std::sin(1.0))) < 1e-10);
    // g(w) = exp(e^w) at w = 0: g' = e, g'' = 2e, g''' = 5e, g'''' = 15e (Bell numbers).
    const auto expz = polar::parse("exp(z)");
    const double bell[] = {1, 1, 2, 5, 15};
    for (int k = 0; k <= 4; ++k)
        CHECK(std::abs(polar::iterated_theta0(expz, c, k) - bell[k] * std::numbers::e) < 1e-8 * bell[k] * std::numbers::e);
}

TEST_CASE("iterates agree with a finite-difference oracle and with k! a_k") {
    for (const auto& k : known_functions()) {
        const auto e = polar::parse(k.source);
        const PolarPoint c(1, 0);
        const Complex fd = g_second_fd(e, c);
        const Complex it2 = polar::iterated_theta0(e, c, 2);
        INFO(k.name);
        CHECK(std::abs(it2 - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));

        const auto t = polar::taylor(e, c, 10, 0.5, 512);
        double fact = 1.0;
        for (int j = 0; j <= 4; ++j) {
            if (j > 0) fact *= j;
            const Complex want = fact * t.coefficients[j];
            CHECK(std::abs(polar::iterated_theta0(e, c, j) - want) <= 1e-7 * std::max(1.0, std::abs(want)));
        }
    }
}
