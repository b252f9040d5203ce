#pragma once

#include <complex>

namespace polar {

// Complex value with its first partials along r and theta.
// In one-variable mode the `dr` slot carries d/dx.
struct Dual1 {
    std::complex<double> val{};
    std::complex<double> dr{};
    std::complex<double> dtheta{};

    static Dual1 constant(std::complex<double> v) { return {v, 0.0, 0.0}; }
};

inline Dual1 operator+(const Dual1& a, const Dual1& b) {
    return {a.val + b.val, a.dr + b.dr, a.dtheta + b.dtheta};
}

inline Dual1 operator-(const Dual1& a, const Dual1& b) {
    return {a.val - b.val, a.dr - b.dr, a.dtheta - b.dtheta};
}

inline Dual1 operator-(const Dual1& a) { return {-a.val, -a.dr, -a.dtheta}; }

inline Dual1 operator*(const Dual1& a, const Dual1& b) {
    return {a.val * b.val, a.dr * b.val + a.val * b.dr, a.dtheta * b.val + a.val * b.dtheta};
}

// Caller guarantees b.val != 0.
inline Dual1 operator/(const Dual1& a, const Dual1& b) {
    const auto q = a.val / b.val;
    return {q, (a.dr - q * b.dr) / b.val, (a.dtheta - q * b.dtheta) / b.val};
}

// Applies the chain rule for a scalar function with value fv and derivative fd at a.val.
inline Dual1 chain(const Dual1& a, std::complex<double> fv, std::complex<double> fd) {
    return {fv, fd * a.dr, fd * a.dtheta};
}

inline Dual1 exp(const Dual1& a) {
    const auto e = std::exp(a.val);
    return chain(a, e, e);
}

// Principal branch; caller guarantees a.val != 0.
inline Dual1 log(const Dual1& a) { return chain(a, std::log(a.val), 1.0 / a.val); }

inline Dual1 sin(const Dual1& a) { return chain(a, std::sin(a.val), std::cos(a.val)); }
inline Dual1 cos(const Dual1& a) { return chain(a, std::cos(a.val), -std::sin(a.val)); }
inline Dual1 sinh(const Dual1& a) { return chain(a, std::sinh(a.val), std::cosh(a.val)); }
inline Dual1 cosh(const Dual1& a) { return chain(a, std::cosh(a.val), std::sinh(a.val)); }

} // namespace polar
