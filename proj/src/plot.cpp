#include "polar/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace polar {

namespace {

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string render_svg(const std::vector<SvgPolyline>& lines) {
    constexpr double kSize = 1000.0;
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& l : lines) {
        for (const auto& [x, y] : l.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmin <= xmax)) xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double scale = 0.9 * kSize / span;
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    auto px = [&](double x) { return 0.5 * kSize + (x - cx) * scale; };
    auto py = [&](double y) { return 0.5 * kSize - (y - cy) * scale; };

    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
        "viewBox=\"0 0 1000 1000\">\n<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    const double x0 = px(0.0);
    const double y0 = py(0.0);
    if (x0 >= 0.0 && x0 <= kSize)
        out += "<line x1=\"" + fixed(x0) + "\" y1=\"0\" x2=\"" + fixed(x0) +
               "\" y2=\"1000\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    if (y0 >= 0.0 && y0 <= kSize)
        out += "<line x1=\"0\" y1=\"" + fixed(y0) + "\" x2=\"1000\" y2=\"" + fixed(y0) +
               "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    for (const auto& l : lines) {
        if (l.points.empty()) continue;
        out += l.closed ? "<polygon" : "<polyline";
        out += " fill=\"none\" stroke=\"" + l.stroke + "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [x, y] : l.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            if (!first) out += ' ';
            out += fixed(px(x)) + "," + fixed(py(y));
            first = false;
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string disk_to_svg(const PolarDisk& d, int samples) {
    SvgPolyline pl;
    pl.closed = true;
    for (const auto& p : disk_boundary(d, samples)) pl.points.emplace_back(p.theta(), p.r());
    SvgPolyline center;
    center.stroke = "#d62728";
    const double eps = 0.01 * d.radius;
    center.points = {{d.center.theta() - eps, d.center.r()}, {d.center.theta() + eps, d.center.r()}};
    return render_svg({pl, center});
}

} // namespace polar
