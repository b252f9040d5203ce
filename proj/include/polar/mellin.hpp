#pragma once

#include "polar/expr.hpp"

namespace polar {

// Real constant c of the Mellin derivatives.
class MellinConstant {
public:
    explicit MellinConstant(double c);
    double value() const noexcept { return c_; }

private:
    double c_;
};

// Theta_c phi(x) = x phi'(x) + c phi(x) for a one-variable expression phi.
Complex mellin_derivative(const Expression& phi, MellinConstant c, double x);

// Mellin polar-derivative r e^{i theta} (D_pol f)(r, theta) + c f(r, theta).
Complex mellin_polar_derivative(const Expression& e, MellinConstant c, const PolarPoint& p);

// k-th iterate of the c = 0 Mellin polar-derivative at p, k in [0, 4]; equals
// g^{(k)}(log r0 + i theta0) for g(x + iy) = f(e^x, y). Orders k >= 2 come from
// contour-sampled Taylor coefficients (k! a_k) with sampling radius `sample_radius`.
Complex iterated_theta0(const Expression& e, const PolarPoint& p, int k,
                        double sample_radius = 0.8);

} // namespace polar
