#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "polar/expr.hpp"

namespace testing {

using polar::Complex;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Closed forms written directly in w = r e^{i theta}, independent of the parser.
struct Known {
    std::string name;
    std::string source;
    std::string restriction; // f(x, 0) as a one-variable expression
    std::function<Complex(double, double)> value;
    std::function<Complex(double, double)> dpol;
};

inline Complex w_of(double r, double th) { return std::polar(r, th); }

inline const std::vector<Known>& known_functions() {
    static const std::vector<Known> k = {
        {"L", "L", "log(x)",
         [](double r, double th) { return Complex(std::log(r), th); },
         [](double r, double th) { return 1.0 / w_of(r, th); }},
        {"z^2", "z^2", "x^2",
         [](double r, double th) { return w_of(r, th) * w_of(r, th); },
         [](double r, double th) { return 2.0 * w_of(r, th); }},
        {"sqrt", "r^0.5*exp(i*theta/2)", "x^0.5",
         [](double r, double th) { return std::polar(std::sqrt(r), th / 2); },
         [](double r, double th) { return 0.5 / std::polar(std::sqrt(r), th / 2); }},
        {"sin z", "sin(z)", "sin(x)",
         [](double r, double th) { return std::sin(w_of(r, th)); },
         [](double r, double th) { return std::cos(w_of(r, th)); }},
        {"exp z", "exp(z)", "exp(x)",
         [](double r, double th) { return std::exp(w_of(r, th)); },
         [](double r, double th) { return std::exp(w_of(r, th)); }},
        {"1/z", "exp(-i*theta)/r", "1/x",
         [](double r, double th) { return 1.0 / w_of(r, th); },
         [](double r, double th) { return -1.0 / (w_of(r, th) * w_of(r, th)); }},
    };
    return k;
}

// Random trees in the image of the parser: non-negative real constants or i,
// negation through Neg nodes. With allow_x the only variable is x.
inline polar::Expression random_tree(int depth, bool allow_x = false) {
    using polar::Expression;
    using polar::NodeKind;
    auto leaf = [&]() -> Expression {
        switch (uniform_int(0, 3)) {
        case 0: return allow_x ? Expression::var_x() : Expression::var_r();
        case 1: return allow_x ? Expression::var_x() : Expression::var_theta();
        case 2: return Expression::constant(Complex(0.0, 1.0));
        default: {
            const int style = uniform_int(0, 3);
            if (style == 0) return Expression::constant(uniform_int(0, 9));
            if (style == 1) return Expression::constant(uniform(0.0, 10.0));
            if (style == 2) return Expression::constant(std::ldexp(uniform(0.5, 1.0), uniform_int(-60, 60)));
            return Expression::constant(0.1 * uniform_int(0, 30));
        }
        }
    };
    if (depth <= 0 || uniform_int(0, 9) < 2) return leaf();
    static const NodeKind unary[] = {NodeKind::Neg, NodeKind::Exp, NodeKind::Log, NodeKind::Sin,
                                     NodeKind::Cos, NodeKind::Sinh, NodeKind::Cosh};
    static const NodeKind binary[] = {NodeKind::Add, NodeKind::Sub, NodeKind::Mul, NodeKind::Div,
                                      NodeKind::Pow};
    if (uniform_int(0, 2) == 0)
        return Expression::unary(unary[uniform_int(0, 6)], random_tree(depth - 1, allow_x));
    return Expression::binary(binary[uniform_int(0, 4)], random_tree(depth - 1, allow_x),
                              random_tree(depth - 1, allow_x));
}

} // namespace testing
