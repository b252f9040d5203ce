#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>

#include "polar/expr.hpp"
#include "support.hpp"

using polar::Complex;
using polar::Expression;
using polar::NodeKind;
using polar::PolarPoint;
using namespace testing;

namespace {

const Complex I(0.0, 1.0);

Expression c(Complex v) { return Expression::constant(v); }
Expression un(NodeKind k, Expression a) { return Expression::unary(k, std::move(a)); }
Expression bin(NodeKind k, Expression a, Expression b) {
    return Expression::binary(k, std::move(a), std::move(b));
}

polar::ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const polar::Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return polar::ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("sugar expands at parse time") {
    const Expression r = Expression::var_r();
    const Expression th = Expression::var_theta();
    CHECK(polar::parse("L") == bin(NodeKind::Add, un(NodeKind::Log, r), bin(NodeKind::Mul, c(I), th)));
    CHECK(polar::parse("sin(z)") ==
          un(NodeKind::Sin, bin(NodeKind::Mul, r, un(NodeKind::Exp, bin(NodeKind::Mul, c(I), th)))));
    CHECK(polar::parse("r^2 * exp(i*2*theta)") ==
          bin(NodeKind::Mul, bin(NodeKind::Pow, r, c(2.0)),
              un(NodeKind::Exp, bin(NodeKind::Mul, bin(NodeKind::Mul, c(I), c(2.0)), th))));
}

TEST_CASE("precedence and associativity") {
    const PolarPoint p(2.0, 0.5);
    CHECK(polar::eval(polar::parse("1+2*3"), p) == Complex(7.0));
    CHECK(polar::eval(polar::parse("(1+2)*3"), p) == Complex(9.0));
    CHECK(polar::eval(polar::parse("8/4/2"), p) == Complex(1.0));
    CHECK(polar::eval(polar::parse("10-4-3"), p) == Complex(3.0));
    // factor := unary ("^" factor)? makes ^ right-associative.
    CHECK(polar::parse("2^3^2") ==
          bin(NodeKind::Pow, c(2.0), bin(NodeKind::Pow, c(3.0), c(2.0))));
    CHECK(polar::parse("-r") == un(NodeKind::Neg, Expression::var_r()));
    CHECK(polar::parse("--r") == un(NodeKind::Neg, un(NodeKind::Neg, Expression::var_r())));
}

TEST_CASE("canonical printing") {
    CHECK(polar::print(polar::parse("L")) == "log(r) + i*theta");
    CHECK(polar::print(c(0.0)) == "0");
    CHECK(polar::print(polar::parse("r - (theta - 1)")) == "r - (theta - 1)");
    CHECK(polar::print(polar::parse("(r - theta) - 1")) == "r - theta - 1");
    CHECK(polar::print(polar::parse("r / (theta * 2)")) == "r/(theta*2)");
    CHECK(polar::print(polar::parse("(2^3)^2")) == "(2^3)^2");
    CHECK(polar::print(polar::parse("2^3^2")) == "2^3^2");
    CHECK(polar::print(polar::parse("(-2)^2")) == "-2^2");
    CHECK(polar::format_number(0.1) == "0.1");
    CHECK(polar::format_number(1e-300) == "1e-300");
}

TEST_CASE("round trip on 1000 random trees") {
    for (int n = 0; n < 1000; ++n) {
        const Expression e = random_tree(6);
        const std::string text = polar::print(e);
        const Expression back = polar::parse(text);
        INFO(text);
        REQUIRE(back == e);
        CHECK(polar::print(back) == text);
    }
}

TEST_CASE("round trip in one-variable mode") {
    for (int n = 0; n < 200; ++n) {
        const Expression e = random_tree(5, true);
        const std::string text = polar::print(e, "t");
        INFO(text);
        REQUIRE(polar::parse_univariate(text, "t") == e);
    }
}

TEST_CASE("evaluation examples") {
    CHECK(std::abs(polar::eval(polar::parse("L"), PolarPoint(1, 0))) == 0.0);
    CHECK(std::abs(polar::eval(polar::parse("sin(z)"), PolarPoint(1, 0)) - std::sin(1.0)) < 1e-15);
    const Complex v = polar::eval(polar::parse("exp(-i*theta)/r"), PolarPoint(2, std::numbers::pi));
    CHECK(std::abs(v - Complex(-0.5, 0.0)) < 1e-15);
    CHECK(polar::eval(polar::parse("i*i"), PolarPoint(1, 0)) == Complex(-1.0, 0.0));
    CHECK(polar::eval_at(polar::parse_univariate("x^3"), 2.0) == Complex(8.0));
}

TEST_CASE("catalog sources match their closed forms") {
    for (const auto& k : known_functions()) {
        const Expression e = polar::parse(k.source);
        for (int n = 0; n < 50; ++n) {
            const double r = uniform(0.2, 3.0);
            const double th = uniform(-3.0, 3.0);
            INFO(k.name << " at " << r << "," << th);
            CHECK(rel_err(polar::eval(e, PolarPoint(r, th)), k.value(r, th)) < 1e-13);
        }
    }
}

TEST_CASE("evaluation is a homomorphism over composite nodes") {
    const NodeKind binaries[] = {NodeKind::Add, NodeKind::Sub, NodeKind::Mul, NodeKind::Div};
    int checked = 0;
    for (int n = 0; n < 400; ++n) {
        const Expression a = random_tree(3);
        const Expression b = random_tree(3);
        const PolarPoint p(uniform(0.1, 4.0), uniform(-4.0, 4.0));
        Complex va, vb;
        try {
            va = polar::eval(a, p);
            vb = polar::eval(b, p);
        } catch (const polar::Error&) {
            continue;
        }
        ++checked;
        for (NodeKind k : binaries) {
            Complex want;
            switch (k) {
            case NodeKind::Add: want = va + vb; break;
            case NodeKind::Sub: want = va - vb; break;
            case NodeKind::Mul: want = va * vb; break;
            default:
                if (vb == Complex(0.0)) continue;
                want = va / vb;
            }
            try {
                const Complex got = polar::eval(bin(k, a, b), p);
                if (std::isfinite(want.real()) && std::isfinite(want.imag())) CHECK(got == want);
            } catch (const polar::Error& e) {
                CHECK(e.code() == polar::ErrorCode::NonFinite);
            }
        }
        const std::pair<NodeKind, Complex> unaries[] = {
            {NodeKind::Neg, -va},
            {NodeKind::Exp, std::exp(va)},
            {NodeKind::Sin, std::sin(va)},
            {NodeKind::Cosh, std::cosh(va)},
            {NodeKind::Log, va == Complex(0.0) ? Complex(std::nan("")) : std::log(va)},
        };
        for (const auto& [k, want] : unaries) {
            if (!std::isfinite(want.real()) || !std::isfinite(want.imag())) continue;
            Complex got;
            try {
                got = polar::eval(un(k, a), p);
            } catch (const polar::Error& e) {
                CHECK(e.code() == polar::ErrorCode::NonFinite);
                continue;
            }
            CHECK(got == want);
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("integer powers agree with exp(n log a)") {
    int checked = 0;
    for (int n = 0; n < 2000 && checked < 500; ++n) {
        const Expression a = random_tree(3);
        const PolarPoint p(uniform(0.2, 3.0), uniform(-3.0, 3.0));
        Complex va;
        try {
            va = polar::eval(a, p);
        } catch (const polar::Error&) {
            continue;
        }
        if (std::abs(va) < 1e-9 || std::abs(va) > 1e3) continue;
        if (va.real() < 0.0 && std::abs(va.imag()) < 1e-12 * std::abs(va)) continue;
        const int k = uniform_int(0, 8);
        const Complex got = polar::eval(bin(NodeKind::Pow, a, c(double(k))), p);
        const Complex want = std::exp(double(k) * std::log(va));
        INFO(polar::print(a) << " ^ " << k);
        CHECK(std::abs(got - want) <= 1e-12 * std::max(1e-300, std::abs(want)));
        ++checked;
    }
    CHECK(checked >= 500);
}

TEST_CASE("non-integer and negative constant exponents use the principal branch") {
    const Complex got = polar::eval(polar::parse("r^0.5"), PolarPoint(4.0, 1.0));
    CHECK(std::abs(got - 2.0) < 1e-15);
    const Complex neg = polar::eval(polar::parse("r^(-1)"), PolarPoint(4.0, 0.0));
    CHECK(std::abs(neg - 0.25) < 1e-15);
}

TEST_CASE("parse errors carry an offset and expected tokens") {
    try {
        polar::parse("r + ");
        FAIL("no error");
    } catch (const polar::ParseError& e) {
        CHECK(e.code() == polar::ErrorCode::Parse);
        CHECK(e.offset() == 4);
        CHECK(!e.expected().empty());
    }
    try {
        polar::parse("2 * foo(r)");
        FAIL("no error");
    } catch (const polar::ParseError& e) {
        CHECK(e.code() == polar::ErrorCode::UnknownIdentifier);
        CHECK(e.offset() == 4);
    }
    try {
        polar::parse("(r + 1");
        FAIL("no error");
    } catch (const polar::ParseError& e) {
        CHECK(e.offset() == 6);
    }
    CHECK(code_of([] { polar::parse("x + 1"); }) == polar::ErrorCode::UnknownIdentifier);
    CHECK(code_of([] { polar::parse_univariate("r + 1"); }) == polar::ErrorCode::UnknownIdentifier);
    CHECK(code_of([] { polar::parse_univariate("z"); }) == polar::ErrorCode::UnknownIdentifier);
    CHECK(code_of([] { polar::parse("R"); }) == polar::ErrorCode::UnknownIdentifier);
    CHECK(code_of([] { polar::parse("1 2"); }) == polar::ErrorCode::Parse);
    CHECK(code_of([] { polar::parse(""); }) == polar::ErrorCode::Parse);
}

TEST_CASE("evaluation errors") {
    const PolarPoint p(1.0, 0.0);
    CHECK(code_of([&] { polar::eval(polar::parse("1/(r-1)"), p); }) ==
          polar::ErrorCode::DivisionByZero);
    CHECK(code_of([&] { polar::eval(polar::parse("log(r-1)"), p); }) == polar::ErrorCode::LogOfZero);
    CHECK(code_of([] { PolarPoint(0.0, 1.0); }) == polar::ErrorCode::Domain);
    CHECK(code_of([] { PolarPoint(-1.0, 1.0); }) == polar::ErrorCode::Domain);
    CHECK(code_of([] { PolarPoint(1.0, std::nan("")); }) == polar::ErrorCode::Domain);
    CHECK(code_of([] { polar::eval_at(polar::parse_univariate("x"), 0.0); }) == polar::ErrorCode::Domain);
}

TEST_CASE("variable usage queries") {
    CHECK(polar::uses_polar_variables(polar::parse("z")));
    CHECK(!polar::uses_polar_variables(polar::parse("1+i")));
    CHECK(polar::uses_x(polar::parse_univariate("x*2")));
    CHECK(!polar::uses_x(polar::parse("r")));
}
