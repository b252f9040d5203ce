#pragma once

#include "polar/expr.hpp"

namespace polar {

// Closed coordinate rectangle [r_min, r_max] x [theta_min, theta_max] in H.
struct Rect {
    double r_min;
    double r_max;
    double theta_min;
    double theta_max;

    // Throws Error(Domain) unless 0 < r_min < r_max and theta_min < theta_max.
    void validate() const;
};

// Equispaced grid coordinate k of n over [lo, hi]; the last node is exactly hi.
inline double grid_node(double lo, double hi, int k, int n) {
    if (k == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

} // namespace polar
