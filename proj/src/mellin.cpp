#include "polar/mellin.hpp"

#include <cmath>

#include "polar/analysis.hpp"
#include "polar/diffcore.hpp"

namespace polar {

MellinConstant::MellinConstant(double c) : c_(c) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "Mellin constant must be finite");
}

Complex mellin_derivative(const Expression& phi, MellinConstant c, double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw Error(ErrorCode::Domain, "Mellin derivative needs x > 0");
    const Dual1 d = eval_dual_at(phi, x);
    return x * d.dr + c.value() * d.val;
}

Complex mellin_polar_derivative(const Expression& e, MellinConstant c, const PolarPoint& p) {
    const Dual1 d = eval_dual(e, p);
    const Complex dp = std::polar(1.0, -p.theta()) * d.dr;
    return std::polar(p.r(), p.theta()) * dp + c.value() * d.val;
}

Complex iterated_theta0(const Expression& e, const PolarPoint& p, int k, double sample_radius) {
    if (k < 0 || k > 4) throw Error(ErrorCode::InvalidArgument, "iterate order must be in [0, 4]");
    if (k == 0) return eval(e, p);
    if (k == 1) return mellin_polar_derivative(e, MellinConstant(0.0), p);
    const int order = 8;
    const TaylorExpansion t = taylor(e, p, order, sample_radius, default_sample_count(order));
    double factorial = 1.0;
    for (int j = 2; j <= k; ++j) factorial *= j;
    return factorial * t.coefficients[static_cast<std::size_t>(k)];
}

} // namespace polar
