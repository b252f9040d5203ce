#pragma once

// Generic tree walker shared by plain and dual evaluation.

#include <cmath>
#include <complex>

#include "polar/dual.hpp"
#include "polar/expr.hpp"

namespace polar::detail {

template <class T>
struct Bindings {
    T r;
    T theta;
    T x;
};

inline const std::complex<double>& value_of(const std::complex<double>& v) { return v; }
inline const std::complex<double>& value_of(const Dual1& v) { return v.val; }

template <class T>
T make_constant(std::complex<double> v) {
    if constexpr (std::is_same_v<T, Dual1>) {
        return Dual1::constant(v);
    } else {
        return T(v);
    }
}

// Exponent nodes that are non-negative integer constants use repeated multiplication.
inline bool integer_exponent(const Expression& e, unsigned long long& n) {
    if (e.kind() != NodeKind::Const) return false;
    const auto v = e.value();
    if (v.imag() != 0.0 || !(v.real() >= 0.0) || v.real() > 1e9) return false;
    if (std::floor(v.real()) != v.real()) return false;
    n = static_cast<unsigned long long>(v.real());
    return true;
}

template <class T>
T int_power(T base, unsigned long long n) {
    T result = make_constant<T>(1.0);
    while (n > 0) {
        if (n & 1ULL) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

template <class T>
T checked_log(const T& a) {
    if (value_of(a) == std::complex<double>(0.0, 0.0))
        throw Error(ErrorCode::LogOfZero, "log of zero");
    using std::log;
    return log(a);
}

template <class T>
T evaluate(const Expression& e, const Bindings<T>& b) {
    using std::cos;
    using std::cosh;
    using std::exp;
    using std::sin;
    using std::sinh;
    switch (e.kind()) {
    case NodeKind::Const: return make_constant<T>(e.value());
    case NodeKind::VarR: return b.r;
    case NodeKind::VarTheta: return b.theta;
    case NodeKind::VarX: return b.x;
    case NodeKind::Neg: return -evaluate(e.operand(), b);
    case NodeKind::Add: return evaluate(e.lhs(), b) + evaluate(e.rhs(), b);
    case NodeKind::Sub: return evaluate(e.lhs(), b) - evaluate(e.rhs(), b);
    case NodeKind::Mul: return evaluate(e.lhs(), b) * evaluate(e.rhs(), b);
    case NodeKind::Div: {
        const T num = evaluate(e.lhs(), b);
        const T den = evaluate(e.rhs(), b);
        if (value_of(den) == std::complex<double>(0.0, 0.0))
            throw Error(ErrorCode::DivisionByZero, "division by zero");
        return num / den;
    }
    case NodeKind::Pow: {
        const T base = evaluate(e.lhs(), b);
        unsigned long long n = 0;
        if (integer_exponent(e.rhs(), n)) return int_power(base, n);
        const T expo = evaluate(e.rhs(), b);
        return exp(expo * checked_log(base));
    }
    case NodeKind::Exp: return exp(evaluate(e.operand(), b));
    case NodeKind::Log: return checked_log(evaluate(e.operand(), b));
    case NodeKind::Sin: return sin(evaluate(e.operand(), b));
    case NodeKind::Cos: return cos(evaluate(e.operand(), b));
    case NodeKind::Sinh: return sinh(evaluate(e.operand(), b));
    case NodeKind::Cosh: return cosh(evaluate(e.operand(), b));
    }
    throw Error(ErrorCode::InvalidArgument, "corrupt expression node");
}

inline bool finite(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline void require_positive_r(double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw Error(ErrorCode::Domain, "point outside H: r must be positive and finite");
}

} // namespace polar::detail
