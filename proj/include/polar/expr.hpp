#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "polar/error.hpp"

namespace polar {

using Complex = std::complex<double>;

// A point of the polar half-plane H = R+ x R. The angle is not reduced
// modulo 2*pi: (1, 0) and (1, 2*pi) are different points.
class PolarPoint {
public:
    PolarPoint(double r, double theta);

    double r() const noexcept { return r_; }
    double theta() const noexcept { return theta_; }

    friend bool operator==(const PolarPoint&, const PolarPoint&) = default;

private:
    double r_;
    double theta_;
};

enum class NodeKind : std::uint8_t {
    Const,
    VarR,
    VarTheta,
    VarX,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Exp,
    Log,
    Sin,
    Cos,
    Sinh,
    Cosh,
};

int arity(NodeKind kind) noexcept;

// Immutable expression tree. Copies share structure.
class Expression {
public:
    static Expression constant(Complex value);
    static Expression var_r();
    static Expression var_theta();
    static Expression var_x();
    static Expression unary(NodeKind kind, Expression operand);
    static Expression binary(NodeKind kind, Expression lhs, Expression rhs);

    NodeKind kind() const noexcept;
    Complex value() const noexcept; // only meaningful for Const

    // Children. operand() == lhs() for unary nodes.
    const Expression& lhs() const;
    const Expression& rhs() const;
    const Expression& operand() const { return lhs(); }

    std::size_t size() const noexcept;

    // Structural equality.
    friend bool operator==(const Expression& a, const Expression& b);

private:
    struct Node;
    static std::shared_ptr<const Node> leaf(NodeKind kind);
    explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Expression operator+(const Expression& a, const Expression& b);
Expression operator-(const Expression& a, const Expression& b);
Expression operator*(const Expression& a, const Expression& b);
Expression operator/(const Expression& a, const Expression& b);
Expression operator-(const Expression& a);

enum class VariableMode {
    Polar,      // r, theta, z, L
    OneVariable // a single positive real variable, spelled "x" unless renamed
};

struct ParseOptions {
    VariableMode mode = VariableMode::Polar;
    std::string variable = "x";
};

Expression parse(std::string_view source, const ParseOptions& options = {});

// Parse a one-variable expression. Shorthand for parse(src, {OneVariable, var}).
Expression parse_univariate(std::string_view source, std::string variable = "x");

// Canonical text; parse(print(e)) is structurally equal to e for trees produced by parse.
std::string print(const Expression& e, std::string_view variable = "x");

// Shortest decimal text that reads back to exactly `v`.
std::string format_number(double v);

Complex eval(const Expression& e, const PolarPoint& p);
Complex eval_at(const Expression& e, double x); // one-variable mode

bool uses_polar_variables(const Expression& e);
bool uses_x(const Expression& e);

// The grammar of the expression language, for usage messages.
const char* grammar_help() noexcept;

} // namespace polar
