#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature of complex integrands
// over one or more parameter intervals.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

namespace polar {

struct QuadratureInterval {
    std::size_t piece; // passed through to the integrand
    double a;
    double b;
};

struct QuadratureResult {
    std::complex<double> value;
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

namespace detail {

// Kronrod abscissae (descending, last is the centre) and weights; Gauss weights
// belong to the even-indexed Kronrod nodes.
inline constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    QuadratureInterval span;
    std::complex<double> value;
    double error;
};

template <class F>
Panel gauss_kronrod_15(F& f, const QuadratureInterval& iv) {
    const double centre = 0.5 * (iv.a + iv.b);
    const double half = 0.5 * (iv.b - iv.a);
    const std::complex<double> fc = f(iv.piece, centre);
    std::complex<double> kronrod = kWgk[7] * fc;
    std::complex<double> gauss = kWg[3] * fc;
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const std::complex<double> pair = f(iv.piece, centre - dx) + f(iv.piece, centre + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {iv, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

// Refines the panel with the largest error estimate until the summed estimate
// is <= tol * (1 + |value|) or the evaluation budget is exhausted. The returned
// value sums panels piece by piece in parameter order.
template <class F>
QuadratureResult integrate_adaptive(F&& f, std::span<const QuadratureInterval> intervals,
                                    double tol, std::size_t max_evaluations) {
    using detail::Panel;
    constexpr std::size_t kPerPanel = 15;
    auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> open(by_error);
    std::vector<Panel> settled;

    QuadratureResult out;
    std::complex<double> total = 0.0;
    double total_error = 0.0;
    for (const auto& iv : intervals) {
        Panel p = detail::gauss_kronrod_15(f, iv);
        out.evaluations += kPerPanel;
        total += p.value;
        total_error += p.error;
        open.push(p);
    }

    while (!open.empty()) {
        if (total_error <= tol * (1.0 + std::abs(total))) {
            out.converged = true;
            break;
        }
        if (out.evaluations + 2 * kPerPanel > max_evaluations) break;
        Panel worst = open.top();
        open.pop();
        const double mid = 0.5 * (worst.span.a + worst.span.b);
        if (!(mid > std::min(worst.span.a, worst.span.b) &&
              mid < std::max(worst.span.a, worst.span.b))) {
            settled.push_back(worst); // cannot bisect further
            continue;
        }
        const Panel left = detail::gauss_kronrod_15(f, {worst.span.piece, worst.span.a, mid});
        const Panel right = detail::gauss_kronrod_15(f, {worst.span.piece, mid, worst.span.b});
        out.evaluations += 2 * kPerPanel;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        open.push(left);
        open.push(right);
    }
    if (open.empty() && total_error <= tol * (1.0 + std::abs(total))) out.converged = true;

    while (!open.empty()) {
        settled.push_back(open.top());
        open.pop();
    }
    std::sort(settled.begin(), settled.end(), [](const Panel& x, const Panel& y) {
        if (x.span.piece != y.span.piece) return x.span.piece < y.span.piece;
        return x.span.a < y.span.a;
    });
    out.value = 0.0;
    out.error = 0.0;
    for (const auto& p : settled) {
        out.value += p.value;
        out.error += p.error;
    }
    return out;
}

} // namespace polar
