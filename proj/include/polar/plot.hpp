#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polar/analysis.hpp"

namespace polar {

struct SvgPolyline {
    std::vector<std::pair<double, double>> points;
    std::string stroke = "#1f77b4";
    bool closed = false;
};

// Renders polylines into a 1000 x 1000 viewport with equal axis scaling,
// y pointing up, and the coordinate axes drawn when they are in view.
std::string render_svg(const std::vector<SvgPolyline>& lines);

// Polar-disk boundary drawn in the (theta, r) plane.
std::string disk_to_svg(const PolarDisk& d, int samples);

} // namespace polar
