#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polar/expr.hpp"

namespace polar {

// Linearization of a polar-analytic f = u + iv at a point, built from the
// radial partials only:
//   [ u_r   -r0 v_r ]
//   [ v_r    r0 u_r ]
struct Jacobian2 {
    double a11, a12, a21, a22;

    double det() const noexcept { return a11 * a22 - a12 * a21; }
    // J * (dr, dtheta) as a complex number u + iv.
    Complex apply(double dr, double dtheta) const noexcept {
        return {a11 * dr + a12 * dtheta, a21 * dr + a22 * dtheta};
    }
};

Jacobian2 jacobian(const Expression& e, const PolarPoint& p);

// Directions are given by angles phi in (-pi/2, pi/2]; angles are unsigned in [0, pi].
double angle_alpha(double phi1, double phi2);

// cos(beta) = (c1 c2 + r0^2 s1 s2) / (sqrt(c1^2 + r0^2 s1^2) sqrt(c2^2 + r0^2 s2^2))
double cos_beta(double r0, double phi1, double phi2);
// Same quotient in terms of t_j = tan(phi_j), valid for phi_j in (-pi/2, pi/2).
double cos_beta_from_tangents(double r0, double t1, double t2);

// Image angle between the two directions at radius r0; independent of f and theta0.
double angle_beta(double r0, double phi1, double phi2);

// Image angle computed from the actual Jacobian of f at p. Throws
// VanishingDerivative when |D_pol f| <= 1e-12 max(1, |f|).
double angle_beta_via_jacobian(const Expression& e, const PolarPoint& p, double phi1, double phi2);

struct AngleReport {
    double alpha;
    double beta;
    double r0;
    double phi1;
    double phi2;
};

AngleReport angle_report(double r0, double phi1, double phi2);

// Sign (-1, 0, +1) of the derivative of C(s) = cos beta with respect to s = r0^2.
// Equals sign(r0^2 t1 t2 - 1) when t1 != t2, and 0 when t1 == t2 (C is constant).
int cos_beta_slope_sign(double r0, double t1, double t2);

struct BetaProfile {
    enum class Kind {
        Increasing, // cos beta decreasing in r0, beta increasing (t1 t2 <= 0)
        MinimumAt,  // cos beta has its minimum at r0 = 1/sqrt(t1 t2) (t1 t2 > 0)
    };
    Kind kind;
    double t1;
    double t2;
    std::optional<double> r0_star;  // 1/sqrt(t1 t2) for MinimumAt
    double beta_limit_at_zero;      // lim beta as r0 -> 0
    double beta_limit_at_infinity;  // lim beta as r0 -> infinity
    bool constant;                  // t1 == t2: C is constant, beta does not move
};

BetaProfile beta_profile(double t1, double t2);
// From angles; throws TangentUndefined when a direction is vertical (phi = pi/2).
BetaProfile beta_profile_from_angles(double phi1, double phi2);

const char* to_string(BetaProfile::Kind kind) noexcept;

// ---------------------------------------------------------------------------
// Images of an orthogonal coordinate net.

struct NetCurve {
    enum class Family { RLine, ThetaLine };
    Family family;
    double value;                // r = value or theta = value
    std::string id;              // "r=..." or "theta=..."
    std::vector<double> params;  // theta along r-lines, r along theta-lines
    std::vector<Complex> image;
    std::optional<std::string> truncated; // reason, when sampling stopped early
};

struct NetIntersection {
    PolarPoint point;
    std::size_t r_line;
    std::size_t theta_line;
    Complex image;
    Complex tangent_r_line;     // image tangent of the r = const line (moving theta)
    Complex tangent_theta_line; // image tangent of the theta = const line (moving r)
    double normalized_inner = 0.0;
    double det_j = 0.0;
    bool dpol_vanishes = false;
    std::string error;
};

struct NetReport {
    std::vector<NetCurve> curves;
    std::vector<NetIntersection> intersections;
    double theta_lo, theta_hi; // extent of the r-lines
    double r_lo, r_hi;         // extent of the theta-lines
    double max_abs_inner = 0.0; // over intersections with nonvanishing D_pol
};

NetReport map_net(const Expression& e, std::span<const double> r_values,
                  std::span<const double> theta_values, int samples_per_curve);

// One row per sample: curve_id,t,re,im (with a header line).
std::string net_to_csv(const NetReport& net);
// Image-plane polylines, 1000 x 1000 viewport.
std::string net_to_svg(const NetReport& net);

} // namespace polar
