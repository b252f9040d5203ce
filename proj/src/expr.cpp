#include "polar/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "evaluate.hpp"

namespace polar {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::UnknownIdentifier: return "unknown identifier";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::DivisionByZero: return "division by zero";
    case ErrorCode::LogOfZero: return "log of zero";
    case ErrorCode::NonFinite: return "non-finite value";
    case ErrorCode::NonDifferentiable: return "non-differentiable point";
    case ErrorCode::InvalidCurve: return "invalid curve";
    case ErrorCode::EndpointMismatch: return "endpoint mismatch";
    case ErrorCode::ToleranceNotReached: return "tolerance not reached";
    case ErrorCode::NotPolarAnalytic: return "not polar-analytic";
    case ErrorCode::VanishingDerivative: return "vanishing polar derivative";
    case ErrorCode::TangentUndefined: return "tangent undefined";
    case ErrorCode::EmptyBoundary: return "empty boundary";
    case ErrorCode::InvalidArgument: return "invalid argument";
    }
    return "unknown error";
}

PolarPoint::PolarPoint(double r, double theta) : r_(r), theta_(theta) {
    if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(theta))
        throw Error(ErrorCode::Domain, "point outside H: need r > 0 and finite coordinates");
}

// ---------------------------------------------------------------------------
// Tree

struct Expression::Node {
    NodeKind kind;
    Complex value;
    Expression a;
    Expression b;
    std::size_t size;
};

std::shared_ptr<const Expression::Node> Expression::leaf(NodeKind kind) {
    return std::make_shared<const Node>(Node{kind, {}, Expression(nullptr), Expression(nullptr), 1});
}

int arity(NodeKind kind) noexcept {
    switch (kind) {
    case NodeKind::Const:
    case NodeKind::VarR:
    case NodeKind::VarTheta:
    case NodeKind::VarX: return 0;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div:
    case NodeKind::Pow: return 2;
    default: return 1;
    }
}

Expression Expression::constant(Complex value) {
    return Expression(std::make_shared<const Node>(
        Node{NodeKind::Const, value, Expression(nullptr), Expression(nullptr), 1}));
}
Expression Expression::var_r() { return Expression(leaf(NodeKind::VarR)); }
Expression Expression::var_theta() { return Expression(leaf(NodeKind::VarTheta)); }
Expression Expression::var_x() { return Expression(leaf(NodeKind::VarX)); }

Expression Expression::unary(NodeKind kind, Expression operand) {
    if (arity(kind) != 1) throw Error(ErrorCode::InvalidArgument, "node kind is not unary");
    const auto n = operand.node_->size + 1;
    return Expression(
        std::make_shared<const Node>(Node{kind, {}, operand, Expression(nullptr), n}));
}

Expression Expression::binary(NodeKind kind, Expression lhs, Expression rhs) {
    if (arity(kind) != 2) throw Error(ErrorCode::InvalidArgument, "node kind is not binary");
    const auto n = lhs.node_->size + rhs.node_->size + 1;
    return Expression(std::make_shared<const Node>(Node{kind, {}, lhs, rhs, n}));
}

NodeKind Expression::kind() const noexcept { return node_->kind; }
Complex Expression::value() const noexcept { return node_->value; }
std::size_t Expression::size() const noexcept { return node_->size; }

const Expression& Expression::lhs() const {
    if (arity(node_->kind) < 1) throw Error(ErrorCode::InvalidArgument, "leaf has no children");
    return node_->a;
}

const Expression& Expression::rhs() const {
    if (arity(node_->kind) < 2) throw Error(ErrorCode::InvalidArgument, "node has no rhs");
    return node_->b;
}

bool operator==(const Expression& a, const Expression& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (arity(a.kind())) {
    case 0:
        if (a.kind() != NodeKind::Const) return true;
        // Bitwise-style comparison so that 0.0 and -0.0 differ.
        return std::signbit(a.value().real()) == std::signbit(b.value().real()) &&
               std::signbit(a.value().imag()) == std::signbit(b.value().imag()) &&
               a.value() == b.value();
    case 1: return a.operand() == b.operand();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

Expression operator+(const Expression& a, const Expression& b) {
    return Expression::binary(NodeKind::Add, a, b);
}
Expression operator-(const Expression& a, const Expression& b) {
    return Expression::binary(NodeKind::Sub, a, b);
}
Expression operator*(const Expression& a, const Expression& b) {
    return Expression::binary(NodeKind::Mul, a, b);
}
Expression operator/(const Expression& a, const Expression& b) {
    return Expression::binary(NodeKind::Div, a, b);
}
Expression operator-(const Expression& a) { return Expression::unary(NodeKind::Neg, a); }

// ---------------------------------------------------------------------------
// Lexer and parser

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End, Bad };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
    double number = 0.0;
};

struct FunctionName {
    std::string_view name;
    NodeKind kind;
};

constexpr std::array<FunctionName, 6> kFunctions{{
    {"exp", NodeKind::Exp},
    {"log", NodeKind::Log},
    {"sin", NodeKind::Sin},
    {"cos", NodeKind::Cos},
    {"sinh", NodeKind::Sinh},
    {"cosh", NodeKind::Cosh},
}};

const FunctionName* find_function(std::string_view name) {
    for (const auto& f : kFunctions)
        if (f.name == name) return &f;
    return nullptr;
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, start, {}};
        const char c = src_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            return Token{k, start, src_.substr(start, 1)};
        };
        switch (c) {
        case '+': return single(Tok::Plus);
        case '-': return single(Tok::Minus);
        case '*': return single(Tok::Star);
        case '/': return single(Tok::Slash);
        case '^': return single(Tok::Caret);
        case '(': return single(Tok::LParen);
        case ')': return single(Tok::RParen);
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return {Tok::Ident, start, src_.substr(start, pos_ - start)};
        }
        ++pos_;
        return {Tok::Bad, start, src_.substr(start, 1)};
    }

private:
    bool digit_at(std::size_t i) const {
        return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
    }

    Token lex_number(std::size_t start) {
        std::size_t i = pos_;
        bool digits = false;
        while (digit_at(i)) ++i, digits = true;
        if (i < src_.size() && src_[i] == '.') {
            ++i;
            while (digit_at(i)) ++i, digits = true;
        }
        if (!digits) {
            pos_ = start + 1;
            return {Tok::Bad, start, src_.substr(start, 1)};
        }
        if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
            std::size_t j = i + 1;
            if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
            if (digit_at(j)) {
                while (digit_at(j)) ++j;
                i = j;
            }
        }
        pos_ = i;
        const auto text = src_.substr(start, i - start);
        double v = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc() || !std::isfinite(v))
            throw ParseError(ErrorCode::Parse, start, {"NUMBER"},
                             "number out of range at offset " + std::to_string(start));
        return {Tok::Number, start, text, v};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) out += ", ";
        out += items[k];
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view src, const ParseOptions& options) : lexer_(src), opts_(options) {
        if (opts_.mode == VariableMode::OneVariable) {
            const auto& v = opts_.variable;
            if (v.empty() || v == "i" || find_function(v) != nullptr)
                throw Error(ErrorCode::InvalidArgument, "reserved variable name '" + v + "'");
        }
        advance();
    }

    Expression parse_all() {
        Expression e = parse_expr();
        if (tok_.kind != Tok::End) fail({"+", "-", "*", "/", "^", "end of input"});
        return e;
    }

private:
    static constexpr int kMaxDepth = 512;

    void advance() { tok_ = lexer_.next(); }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string found = tok_.kind == Tok::End ? "end of input" : "'" + std::string(tok_.text) + "'";
        throw ParseError(ErrorCode::Parse, tok_.offset, expected,
                         "syntax error at offset " + std::to_string(tok_.offset) + ": found " +
                             found + ", expected one of: " + join(expected));
    }

    std::vector<std::string> atom_expectations() const {
        std::vector<std::string> e{"-", "NUMBER", "i"};
        if (opts_.mode == VariableMode::Polar) {
            e.insert(e.end(), {"r", "theta", "z", "L"});
        } else {
            e.push_back(opts_.variable);
        }
        for (const auto& f : kFunctions) e.emplace_back(std::string(f.name) + "(");
        e.emplace_back("(");
        return e;
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : p_(p) {
            if (++p_.depth_ > kMaxDepth)
                throw ParseError(ErrorCode::Parse, p_.tok_.offset, {},
                                 "expression nested too deeply at offset " +
                                     std::to_string(p_.tok_.offset));
        }
        ~DepthGuard() { --p_.depth_; }
        Parser& p_;
    };

    Expression parse_expr() {
        DepthGuard guard(*this);
        Expression lhs = parse_term();
        while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            const auto op = tok_.kind == Tok::Plus ? NodeKind::Add : NodeKind::Sub;
            advance();
            lhs = Expression::binary(op, lhs, parse_term());
        }
        return lhs;
    }

    Expression parse_term() {
        Expression lhs = parse_factor();
        while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
            const auto op = tok_.kind == Tok::Star ? NodeKind::Mul : NodeKind::Div;
            advance();
            lhs = Expression::binary(op, lhs, parse_factor());
        }
        return lhs;
    }

    Expression parse_factor() {
        DepthGuard guard(*this);
        Expression base = parse_unary();
        if (tok_.kind == Tok::Caret) {
            advance();
            return Expression::binary(NodeKind::Pow, base, parse_factor());
        }
        return base;
    }

    Expression parse_unary() {
        DepthGuard guard(*this);
        if (tok_.kind == Tok::Minus) {
            advance();
            return Expression::unary(NodeKind::Neg, parse_unary());
        }
        return parse_atom();
    }

    Expression parse_atom() {
        switch (tok_.kind) {
        case Tok::Number: {
            const double v = tok_.number;
            advance();
            return Expression::constant(v);
        }
        case Tok::LParen: {
            advance();
            Expression inner = parse_expr();
            if (tok_.kind != Tok::RParen) fail({"+", "-", "*", "/", "^", ")"});
            advance();
            return inner;
        }
        case Tok::Ident: return parse_identifier();
        default: fail(atom_expectations());
        }
    }

    [[noreturn]] void unknown(const std::string& why) const {
        throw ParseError(ErrorCode::UnknownIdentifier, tok_.offset, atom_expectations(),
                         "unknown identifier '" + std::string(tok_.text) + "' at offset " +
                             std::to_string(tok_.offset) + why);
    }

    Expression parse_identifier() {
        const std::string_view name = tok_.text;
        if (const auto* fn = find_function(name)) {
            advance();
            if (tok_.kind != Tok::LParen) fail({"("});
            advance();
            Expression arg = parse_expr();
            if (tok_.kind != Tok::RParen) fail({"+", "-", "*", "/", "^", ")"});
            advance();
            return Expression::unary(fn->kind, arg);
        }
        if (name == "i") {
            advance();
            return Expression::constant(Complex(0.0, 1.0));
        }
        const bool polar = opts_.mode == VariableMode::Polar;
        if (polar) {
            if (name == "r") return advance(), Expression::var_r();
            if (name == "theta") return advance(), Expression::var_theta();
            if (name == "z") {
                advance();
                return Expression::var_r() *
                       Expression::unary(NodeKind::Exp,
                                         Expression::constant(Complex(0.0, 1.0)) *
                                             Expression::var_theta());
            }
            if (name == "L") {
                advance();
                return Expression::unary(NodeKind::Log, Expression::var_r()) +
                       Expression::constant(Complex(0.0, 1.0)) * Expression::var_theta();
            }
            if (name == "x") unknown(" ('x' is only valid in one-variable mode)");
            unknown("");
        }
        if (name == opts_.variable) return advance(), Expression::var_x();
        if (name == "r" || name == "theta" || name == "z" || name == "L")
            unknown(" (polar variables are not valid in one-variable mode)");
        unknown("");
    }

    Lexer lexer_;
    ParseOptions opts_;
    Token tok_{Tok::End, 0, {}};
    int depth_ = 0;
};

} // namespace

Expression parse(std::string_view source, const ParseOptions& options) {
    Parser p(source, options);
    return p.parse_all();
}

Expression parse_univariate(std::string_view source, std::string variable) {
    return parse(source, ParseOptions{VariableMode::OneVariable, std::move(variable)});
}

// ---------------------------------------------------------------------------
// Printer

std::string format_number(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace {

// Precedence levels mirror the grammar: expr < term < factor < unary < atom.
enum Level { kExpr = 0, kTerm = 1, kFactor = 2, kUnary = 3, kAtom = 4 };

const char* function_name(NodeKind k) {
    for (const auto& f : kFunctions)
        if (f.kind == k) return f.name.data();
    return "?";
}

bool printable_literal(Complex v) {
    return v.imag() == 0.0 && !std::signbit(v.imag()) && v.real() >= 0.0 &&
           !std::signbit(v.real()) && std::isfinite(v.real());
}

std::string print_constant(Complex v) {
    if (printable_literal(v)) return format_number(v.real());
    if (v == Complex(0.0, 1.0) && !std::signbit(v.real())) return "i";
    // Not producible by the parser; emit text with the same value.
    std::string out = "(";
    const bool has_re = v.real() != 0.0 || v.imag() == 0.0;
    if (has_re) out += format_number(v.real());
    if (v.imag() != 0.0) {
        if (has_re) out += v.imag() < 0 ? " - " : " + ";
        else if (v.imag() < 0) out += "-";
        out += format_number(std::abs(v.imag())) + "*i";
    }
    return out + ")";
}

int level_of(NodeKind k) {
    switch (k) {
    case NodeKind::Add:
    case NodeKind::Sub: return kExpr;
    case NodeKind::Mul:
    case NodeKind::Div: return kTerm;
    case NodeKind::Pow: return kFactor;
    case NodeKind::Neg: return kUnary;
    default: return kAtom;
    }
}

void emit(const Expression& e, int required, std::string_view var, std::string& out) {
    const bool parens = level_of(e.kind()) < required;
    if (parens) out += '(';
    switch (e.kind()) {
    case NodeKind::Const: out += print_constant(e.value()); break;
    case NodeKind::VarR: out += "r"; break;
    case NodeKind::VarTheta: out += "theta"; break;
    case NodeKind::VarX: out += var; break;
    case NodeKind::Neg:
        out += '-';
        emit(e.operand(), kUnary, var, out);
        break;
    case NodeKind::Add:
    case NodeKind::Sub:
        emit(e.lhs(), kExpr, var, out);
        out += e.kind() == NodeKind::Add ? " + " : " - ";
        emit(e.rhs(), kTerm, var, out);
        break;
    case NodeKind::Mul:
    case NodeKind::Div:
        emit(e.lhs(), kTerm, var, out);
        out += e.kind() == NodeKind::Mul ? '*' : '/';
        emit(e.rhs(), kFactor, var, out);
        break;
    case NodeKind::Pow:
        emit(e.lhs(), kUnary, var, out);
        out += '^';
        emit(e.rhs(), kFactor, var, out);
        break;
    default:
        out += function_name(e.kind());
        out += '(';
        emit(e.operand(), kExpr, var, out);
        out += ')';
        break;
    }
    if (parens) out += ')';
}

} // namespace

std::string print(const Expression& e, std::string_view variable) {
    std::string out;
    emit(e, kExpr, variable, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

Complex eval(const Expression& e, const PolarPoint& p) {
    const detail::Bindings<Complex> b{p.r(), p.theta(), std::numeric_limits<double>::quiet_NaN()};
    if (uses_x(e)) throw Error(ErrorCode::InvalidArgument, "one-variable expression evaluated at a polar point");
    const Complex v = detail::evaluate(e, b);
    if (!detail::finite(v)) throw Error(ErrorCode::NonFinite, "evaluation produced a non-finite value");
    return v;
}

Complex eval_at(const Expression& e, double x) {
    if (uses_polar_variables(e))
        throw Error(ErrorCode::InvalidArgument, "polar expression evaluated in one-variable mode");
    if (!(std::isfinite(x) && x > 0.0)) throw Error(ErrorCode::Domain, "x must be positive and finite");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const detail::Bindings<Complex> b{nan, nan, x};
    const Complex v = detail::evaluate(e, b);
    if (!detail::finite(v)) throw Error(ErrorCode::NonFinite, "evaluation produced a non-finite value");
    return v;
}

namespace {
bool contains_kind(const Expression& e, NodeKind a, NodeKind b) {
    if (e.kind() == a || e.kind() == b) return true;
    switch (arity(e.kind())) {
    case 0: return false;
    case 1: return contains_kind(e.operand(), a, b);
    default: return contains_kind(e.lhs(), a, b) || contains_kind(e.rhs(), a, b);
    }
}
} // namespace

bool uses_polar_variables(const Expression& e) {
    return contains_kind(e, NodeKind::VarR, NodeKind::VarTheta);
}

bool uses_x(const Expression& e) { return contains_kind(e, NodeKind::VarX, NodeKind::VarX); }

const char* grammar_help() noexcept {
    return "expression grammar:\n"
           "  expr   := term ((\"+\"|\"-\") term)*\n"
           "  term   := factor ((\"*\"|\"/\") factor)*\n"
           "  factor := unary (\"^\" factor)?            (right-associative)\n"
           "  unary  := \"-\" unary | atom\n"
           "  atom   := NUMBER | \"i\" | \"r\" | \"theta\" | \"x\" | \"z\" | \"L\"\n"
           "          | IDENT \"(\" expr \")\" | \"(\" expr \")\"\n"
           "  IDENT  := exp | log | sin | cos | sinh | cosh\n"
           "  z = r*exp(i*theta), L = log(r) + i*theta; x only in one-variable mode\n";
}

} // namespace polar
