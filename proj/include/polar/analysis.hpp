#pragma once

#include <span>
#include <string>
#include <vector>

#include "polar/expr.hpp"

namespace polar {

// Point of the log-coordinate plane: x = log r, y = theta.
struct LogPoint {
    double x;
    double y;
};

LogPoint to_log(const PolarPoint& p);
PolarPoint from_log(const LogPoint& q);

// E((r0, theta0), rho) = {(r, theta) : log(r/r0)^2 + (theta - theta0)^2 < rho^2}.
struct PolarDisk {
    PolarPoint center;
    double radius;

    PolarDisk(PolarPoint c, double rho);

    // sqrt(log(r/r0)^2 + (theta - theta0)^2)
    double log_distance(const PolarPoint& p) const;
    bool contains(const PolarPoint& p) const { return log_distance(p) < radius; }
};

// Boundary point at angle phi: r = r0 exp(rho cos phi), theta = theta0 + rho sin phi.
PolarPoint disk_boundary_point(const PolarDisk& d, double phi);

// m >= 8 points traversing the boundary once, phi_k = 2 pi k / m.
std::vector<PolarPoint> disk_boundary(const PolarDisk& d, int m);

// The region A = {x + iy : (e^x, y) in D} for a domain D whose boundary is
// given as polylines in H. Vertices are mapped one by one; edges are straight
// in log coordinates.
class LogDomain {
public:
    struct Component {
        std::vector<LogPoint> vertices;
        bool closed = false;
    };

    LogDomain() = default;
    void add_component(std::span<const PolarPoint> polyline, bool closed);

    const std::vector<Component>& components() const noexcept { return components_; }
    bool empty() const noexcept { return components_.empty(); }

    // Exact Euclidean distance in log coordinates from p to the nearest edge.
    double distance_to_boundary(const PolarPoint& p) const;

private:
    std::vector<Component> components_;
};

// Largest rho with E(center, rho) inside the domain bounded by `boundary`.
double max_radius(const PolarPoint& center, std::span<const PolarPoint> boundary,
                  bool closed = false);
double max_radius(const PolarPoint& center, const LogDomain& domain);

// f(r, theta) = sum_k a_k (log(r/r0) + i (theta - theta0))^k
struct TaylorExpansion {
    PolarPoint center;
    std::vector<Complex> coefficients;
    double sample_radius = 0.0;
    int sample_count = 0;
    double tail_estimate = 0.0; // |a_K| * rho'^K
};

// max(256, 4K rounded up to a power of two)
int default_sample_count(int order);
inline double default_sample_radius(double expansion_radius) { return 0.8 * expansion_radius; }

// Coefficients by sampling g(x + iy) = f(e^x, y) on the circle of radius
// `sample_radius` around log(center) and applying the discrete Cauchy formula.
// Throws NotPolarAnalytic if the residual pre-scan on the disk fails.
TaylorExpansion taylor(const Expression& e, const PolarPoint& center, int order,
                       double sample_radius, int samples);

// Horner evaluation in w = log(r/r0) + i (theta - theta0).
Complex taylor_eval(const TaylorExpansion& t, const PolarPoint& p);

// Partial sum k = 0..K of (-1)^k r^{2k+1} e^{i(2k+1)theta} / (2k+1)!, i.e. sin(r e^{i theta}).
Complex sin_alternative_expansion(const PolarPoint& p, int order);

// {"center":{"r":..,"theta":..},"rho_sample":..,"coefficients":[[re,im],..],"tail_estimate":..}
std::string to_json(const TaylorExpansion& t);

} // namespace polar
