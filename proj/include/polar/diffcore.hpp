#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polar/dual.hpp"
#include "polar/expr.hpp"
#include "polar/region.hpp"

namespace polar {

// Value and exact first partials (forward mode) of f at p.
Dual1 eval_dual(const Expression& e, const PolarPoint& p);

// One-variable mode: `dr` holds d/dx, `dtheta` is zero.
Dual1 eval_dual_at(const Expression& e, double x);

// Polar derivative e^{-i theta} df/dr.
Complex dpol(const Expression& e, const PolarPoint& p);

struct DerivativeReport {
    Complex value;
    Complex dpol_via_r;     // e^{-i theta} df/dr
    Complex dpol_via_theta; // e^{-i theta}/(i r) df/dtheta
    Complex cr_residual;    // df/dtheta - i r df/dr
    PolarPoint point;
};

DerivativeReport derivative_report(const Expression& e, const PolarPoint& p);

// Compact polar Cauchy-Riemann residual df/dtheta - i r df/dr.
// Real part is u_theta + r v_r, imaginary part is v_theta - r u_r.
Complex cr_residual(const Expression& e, const PolarPoint& p);

// max(1, |f|, |df/dr|, r |df/dr|): the scale used by the analyticity verdicts.
double local_scale(const Dual1& d, double r);

// Default relative tolerance for the "polar-analytic" verdict.
inline constexpr double kAnalyticTolerance = 1e-8;

struct GridFailure {
    PolarPoint point;
    std::string message;
};

struct CrGridSummary {
    double max_residual = 0.0;            // max |residual| over evaluated nodes
    std::optional<PolarPoint> argmax;     // node attaining max_residual
    double max_scaled_residual = 0.0;     // max |residual| / local_scale
    std::size_t evaluated = 0;
    std::vector<GridFailure> failures;    // nodes where evaluation failed
    bool analytic = false;                // no failures and scaled max <= tolerance
};

// Exhaustive residual scan over an n_r x n_theta grid on `region` (corners included).
// Ties on the maximum resolve to the smaller r, then the smaller theta.
CrGridSummary check_cr_grid(const Expression& e, const Rect& region, int n_r, int n_theta,
                            double tolerance = kAnalyticTolerance);

} // namespace polar
