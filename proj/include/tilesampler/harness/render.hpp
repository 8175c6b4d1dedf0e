// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tilesampler/domino/tiling.hpp"
#include "tilesampler/lozenge/tiling.hpp"
#include "tilesampler/sixvertex/config.hpp"

namespace tilesampler::harness {

namespace detail {
inline std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline std::string svg_open(double w, double h)
{
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " +
           num(w) + ' ' + num(h) + "\">\n";
}
}  // namespace detail

/// Dominoes as rectangles; class h0/h1/v0/v1 = orientation and checkerboard parity of the lower-left face.
inline std::string render_svg(const domino::Tiling& t, double cell = 12.0)
{
    const int n = t.domain().n();
    std::string out = detail::svg_open(n * cell, n * cell);
    out += "<style>.h0{fill:#d95f02}.h1{fill:#1b9e77}.v0{fill:#7570b3}.v1{fill:#e7298a}rect{stroke:#222;stroke-width:0.5}</style>\n";
    for (const auto& d : domino::dominoes_from_tiling(t)) {
        const int x = std::min(d.a.x, d.b.x), y = std::min(d.a.y, d.b.y);
        const bool h = d.horizontal();
        const std::string cls = std::string(h ? "h" : "v") + std::to_string((x + y) & 1);
        out += "<rect class=\"" + cls + "\" x=\"" + detail::num(x * cell) + "\" y=\"" +
               detail::num((n - y - (h ? 1 : 2)) * cell) + "\" width=\"" + detail::num((h ? 2 : 1) * cell) +
               "\" height=\"" + detail::num((h ? 1 : 2) * cell) + "\"/>\n";
    }
    return out + "</svg>\n";
}

/// Lozenges as quadrilaterals, class o0/o1/o2 by orientation.
inline std::string render_svg(const lozenge::LozengeTiling& t, double cell = 12.0)
{
    const auto& d = t.domain();
    const double s3 = std::sqrt(3.0) / 2.0;
    double min_x = 1e300, max_x = -1e300;
    for (int y = 0; y < d.vertex_height(); ++y)
        for (int x : {0, d.vertex_width() - 1}) {
            min_x = std::min(min_x, x + y / 2.0);
            max_x = std::max(max_x, x + y / 2.0);
        }
    const double height = (d.vertex_height() - 1) * s3;
    auto px = [&](int x, int y) { return std::array<double, 2>{(x + y / 2.0 - min_x) * cell, (height - y * s3) * cell}; };
    std::string out = detail::svg_open((max_x - min_x) * cell, height * cell);
    out += "<style>.o0{fill:#f0f0f0}.o1{fill:#a0a0a0}.o2{fill:#505050}polygon{stroke:#000;stroke-width:0.5}</style>\n";
    for (const auto& l : lozenge::lozenges_from_tiling(t)) {
        std::vector<std::array<int, 2>> pts;
        for (const auto& c : lozenge::TriDomain::corners({l.x, l.y, true})) pts.push_back(c);
        for (const auto& c : lozenge::TriDomain::corners(l.down()))
            if (std::find(pts.begin(), pts.end(), c) == pts.end()) pts.push_back(c);
        // order the four corners by angle around their centroid
        double cx = 0, cy = 0;
        for (const auto& p : pts) {
            cx += p[0] + p[1] / 2.0;
            cy += p[1] * s3;
        }
        cx /= 4;
        cy /= 4;
        std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
            return std::atan2(a[1] * s3 - cy, a[0] + a[1] / 2.0 - cx) < std::atan2(b[1] * s3 - cy, b[0] + b[1] / 2.0 - cx);
        });
        out += "<polygon class=\"o" + std::to_string(l.orientation) + "\" points=\"";
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const auto p = px(pts[k][0], pts[k][1]);
            out += (k ? " " : "") + detail::num(p[0]) + ',' + detail::num(p[1]);
        }
        out += "\"/>\n";
    }
    return out + "</svg>\n";
}

/// Grid edges thin, occupied edges bold; each occupied edge carries data-edge="h|v x y".
inline std::string render_svg(const sixvertex::SixVertexConfig& c, double cell = 20.0)
{
    const int n = c.n();
    const double size = (n + 1) * cell;
    auto vx = [&](double x) { return (x + 1) * cell; };
    auto vy = [&](double y) { return size - (y + 1) * cell; };
    std::string out = detail::svg_open(size, size);
    out += "<style>.grid{stroke:#bbb;stroke-width:1}.path{stroke:#000;stroke-width:4;stroke-linecap:round}</style>\n";
    auto line = [&](const std::string& cls, const std::string& tag, double x1, double y1, double x2, double y2) {
        out += "<line class=\"" + cls + "\"" + tag + " x1=\"" + detail::num(x1) + "\" y1=\"" + detail::num(y1) + "\" x2=\"" +
               detail::num(x2) + "\" y2=\"" + detail::num(y2) + "\"/>\n";
    };
    for (const bool bold : {false, true}) {
        for (int y = 0; y < n; ++y)
            for (int x = 0; x <= n; ++x)
                if (!bold || c.horizontal(x, y))
                    line(bold ? "path" : "grid", bold ? " data-edge=\"h " + std::to_string(x) + ' ' + std::to_string(y) + '"' : "",
                         vx(x - 1), vy(y), vx(x), vy(y));
        for (int y = 0; y <= n; ++y)
            for (int x = 0; x < n; ++x)
                if (!bold || c.vertical(x, y))
                    line(bold ? "path" : "grid", bold ? " data-edge=\"v " + std::to_string(x) + ' ' + std::to_string(y) + '"' : "",
                         vx(x), vy(y - 1), vx(x), vy(y));
    }
    return out + "</svg>\n";
}

}  // namespace tilesampler::harness
