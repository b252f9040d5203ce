#include "polar/diffcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "evaluate.hpp"
#include "parallel.hpp"

namespace polar {

void Rect::validate() const {
    const bool ok = std::isfinite(r_min) && std::isfinite(r_max) && std::isfinite(theta_min) &&
                    std::isfinite(theta_max) && r_min > 0.0 && r_min < r_max &&
                    theta_min < theta_max;
    if (!ok)
        throw Error(ErrorCode::Domain,
                    "rectangle must satisfy 0 < r_min < r_max and theta_min < theta_max");
}

namespace {

void require_finite(const Dual1& d) {
    if (!detail::finite(d.val))
        throw Error(ErrorCode::NonFinite, "evaluation produced a non-finite value");
    if (!detail::finite(d.dr) || !detail::finite(d.dtheta))
        throw Error(ErrorCode::NonDifferentiable, "derivative is not finite at this point");
}

} // namespace

Dual1 eval_dual(const Expression& e, const PolarPoint& p) {
    if (uses_x(e))
        throw Error(ErrorCode::InvalidArgument, "one-variable expression evaluated at a polar point");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const detail::Bindings<Dual1> b{
        {p.r(), 1.0, 0.0}, {p.theta(), 0.0, 1.0}, Dual1::constant(Complex(nan, nan))};
    const Dual1 d = detail::evaluate(e, b);
    require_finite(d);
    return d;
}

Dual1 eval_dual_at(const Expression& e, double x) {
    if (uses_polar_variables(e))
        throw Error(ErrorCode::InvalidArgument, "polar expression evaluated in one-variable mode");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const Dual1 poison = Dual1::constant(Complex(nan, nan));
    const detail::Bindings<Dual1> b{poison, poison, {x, 1.0, 0.0}};
    const Dual1 d = detail::evaluate(e, b);
    require_finite(d);
    return d;
}

Complex dpol(const Expression& e, const PolarPoint& p) {
    const Dual1 d = eval_dual(e, p);
    return std::polar(1.0, -p.theta()) * d.dr;
}

DerivativeReport derivative_report(const Expression& e, const PolarPoint& p) {
    const Dual1 d = eval_dual(e, p);
    const Complex rot = std::polar(1.0, -p.theta());
    const Complex ir(0.0, p.r());
    return DerivativeReport{
        d.val,
        rot * d.dr,
        rot * d.dtheta / ir,
        d.dtheta - ir * d.dr,
        p,
    };
}

Complex cr_residual(const Expression& e, const PolarPoint& p) {
    const Dual1 d = eval_dual(e, p);
    return d.dtheta - Complex(0.0, p.r()) * d.dr;
}

double local_scale(const Dual1& d, double r) {
    const double g = std::abs(d.dr);
    return std::max({1.0, std::abs(d.val), g, r * g});
}

CrGridSummary check_cr_grid(const Expression& e, const Rect& region, int n_r, int n_theta,
                            double tolerance) {
    region.validate();
    if (n_r < 2 || n_theta < 2)
        throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 nodes per axis");

    struct NodeResult {
        double residual = 0.0;
        double scaled = 0.0;
        std::string error;
    };
    const auto total = static_cast<std::size_t>(n_r) * static_cast<std::size_t>(n_theta);
    std::vector<NodeResult> results(total);

    // Row-major in r: index = i * n_theta + j.
    detail::parallel_for(total, [&](std::size_t k) {
        const int i = static_cast<int>(k / n_theta);
        const int j = static_cast<int>(k % n_theta);
        const PolarPoint p(grid_node(region.r_min, region.r_max, i, n_r),
                           grid_node(region.theta_min, region.theta_max, j, n_theta));
        try {
            const Dual1 d = eval_dual(e, p);
            const double res = std::abs(d.dtheta - Complex(0.0, p.r()) * d.dr);
            results[k] = {res, res / local_scale(d, p.r()), {}};
        } catch (const Error& err) {
            results[k].error = err.what();
        }
    });

    CrGridSummary out;
    for (std::size_t k = 0; k < total; ++k) {
        const int i = static_cast<int>(k / n_theta);
        const int j = static_cast<int>(k % n_theta);
        const PolarPoint p(grid_node(region.r_min, region.r_max, i, n_r),
                           grid_node(region.theta_min, region.theta_max, j, n_theta));
        const auto& res = results[k];
        if (!res.error.empty()) {
            out.failures.push_back({p, res.error});
            continue;
        }
        ++out.evaluated;
        // Strict comparison in ascending (r, theta) order keeps the earliest tie.
        if (!out.argmax || res.residual > out.max_residual) {
            out.max_residual = res.residual;
            out.argmax = p;
        }
        out.max_scaled_residual = std::max(out.max_scaled_residual, res.scaled);
    }
    out.analytic = out.failures.empty() && out.evaluated > 0 &&
                   out.max_scaled_residual <= tolerance;
    return out;
}

} // namespace polar
