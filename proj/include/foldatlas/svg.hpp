#pragma once

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "foldatlas/curve.hpp"
#include "foldatlas/invariants.hpp"

namespace foldatlas {

// Deterministic rendering parameters; output is byte-stable for fixed input.
struct RenderSpec {
    double stroke_width = 0.012;
    double marker_radius = 0.02;
    double arrow_length = 0.09;    // coorientation tick / orientation arrow size
    double padding = 0.25;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    if (v == 0.0) v = 0.0;   // normalise -0
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

inline const char* component_color(std::size_t index) {
    static constexpr std::array<const char*, 8> palette = {
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return palette[index % palette.size()];
}

}  // namespace detail

// One path per component, an orientation arrowhead and a coorientation tick at
// the basepoint, and a labelled dot at every crossing.
inline std::string render_svg(const PlanarCurve& curve, const RenderSpec& spec = {}) {
    using detail::fmt;
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    bool first = true;
    for (const auto& c : curve.components)
        for (const Vec2& v : c.vertices) {
            if (first) {
                min_x = max_x = v.x;
                min_y = max_y = v.y;
                first = false;
            }
            min_x = std::min(min_x, v.x);
            max_x = std::max(max_x, v.x);
            min_y = std::min(min_y, v.y);
            max_y = std::max(max_y, v.y);
        }
    min_x -= spec.padding;
    min_y -= spec.padding;
    max_x += spec.padding;
    max_y += spec.padding;

    // SVG y grows downward; flip so the plane's orientation reads correctly
    const auto px = [&](Vec2 v) { return fmt(v.x); };
    const auto py = [&](Vec2 v) { return fmt(max_y + min_y - v.y); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(min_x) << " " << fmt(min_y)
       << " " << fmt(max_x - min_x) << " " << fmt(max_y - min_y) << "\">\n";

    const std::vector<Crossing> crossings =
        curve.components.empty() ? std::vector<Crossing>{} : find_crossings(curve);

    for (std::size_t ci = 0; ci < curve.components.size(); ++ci) {
        const auto& comp = curve.components[ci];
        const char* color = detail::component_color(ci);
        os << "<path fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
           << fmt(spec.stroke_width) << "\" d=\"";
        for (std::size_t i = 0; i < comp.vertices.size(); ++i)
            os << (i == 0 ? "M" : "L") << px(comp.vertices[i]) << " " << py(comp.vertices[i]);
        os << "Z\"/>\n";

        // orientation arrowheads and coorientation ticks at quarter-arclength
        // stations, starting from the basepoint
        const ComponentGeometry g(comp);
        const double base_param = g.cum[comp.basepoint];
        for (int station = 0; station < 4; ++station) {
            const double param = std::fmod(base_param + station * g.total / 4.0, g.total);
            const Vec2 at = g.point_at(param);
            const Vec2 t = g.tangent_at(param);
            const Vec2 c = coorientation(t);
            const Vec2 tip = at + spec.arrow_length * t;
            const Vec2 left = at + (0.4 * spec.arrow_length) * Vec2{-t.y, t.x};
            const Vec2 right = at + (0.4 * spec.arrow_length) * Vec2{t.y, -t.x};
            os << "<path fill=\"" << color << "\" d=\"M" << px(tip) << " " << py(tip) << "L"
               << px(left) << " " << py(left) << "L" << px(right) << " " << py(right) << "Z\"/>\n";
            const Vec2 cend = at + spec.arrow_length * c;
            os << "<line stroke=\"" << color << "\" stroke-width=\"" << fmt(spec.stroke_width)
               << "\" x1=\"" << px(at) << "\" y1=\"" << py(at) << "\" x2=\"" << px(cend)
               << "\" y2=\"" << py(cend) << "\"/>\n";
        }
    }

    for (const auto& cr : crossings) {
        os << "<circle fill=\"" << (cr.sign > 0 ? "#000000" : "#ffffff")
           << "\" stroke=\"#000000\" stroke-width=\"" << fmt(spec.stroke_width * 0.75) << "\" cx=\""
           << px(cr.location) << "\" cy=\"" << py(cr.location) << "\" r=\"" << fmt(spec.marker_radius)
           << "\"/>\n";
        const Vec2 label = cr.location + Vec2{spec.marker_radius * 1.4, spec.marker_radius * 1.4};
        os << "<text x=\"" << px(label) << "\" y=\"" << py(label) << "\" font-size=\""
           << fmt(spec.marker_radius * 3.0) << "\">" << (cr.sign > 0 ? "+" : "-") << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace foldatlas
