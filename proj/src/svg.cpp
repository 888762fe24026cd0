#include "tritile/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tritile {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const Tiling& t, const RenderStyle& style,
                       const std::vector<std::pair<Vec2, Vec2>>& arrows,
                       const std::vector<std::pair<Vec2, Vec2>>& pair_marks) {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    auto feed = [&](Vec2 v) {
        lo_x = std::min(lo_x, v.x);
        hi_x = std::max(hi_x, v.x);
        lo_y = std::min(lo_y, v.y);
        hi_y = std::max(hi_y, v.y);
    };
    for (const auto& tile : t.tiles)
        for (auto v : tile.verts) feed(v);
    if (t.region)
        for (auto v : *t.region) feed(v);
    if (lo_x > hi_x) lo_x = lo_y = 0, hi_x = hi_y = 1;

    double s = style.scale;
    double pad = 20.0;
    double w = (hi_x - lo_x) * s + 2 * pad, h = (hi_y - lo_y) * s + 2 * pad;
    // SVG y grows downward; model y grows upward
    auto X = [&](Vec2 v) { return (v.x - lo_x) * s + pad; };
    auto Y = [&](Vec2 v) { return h - ((v.y - lo_y) * s + pad); };
    auto pt = [&](Vec2 v) { return fmt(X(v)) + "," + fmt(Y(v)); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
        << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const std::string* col[3] = {&style.color_a, &style.color_b, &style.color_c};

    for (const auto& tile : t.tiles) {
        out << "<polygon points=\"" << pt(tile.verts[0]) << " " << pt(tile.verts[1]) << " " << pt(tile.verts[2])
            << "\" fill=\"" << (tile.mirrored ? "#f3e9d8" : "#e8eef7") << "\" stroke=\"none\"/>\n";
    }
    for (const auto& tile : t.tiles) {
        for (const auto& e : tile.edges) {
            out << "<line x1=\"" << fmt(X(e.from)) << "\" y1=\"" << fmt(Y(e.from)) << "\" x2=\"" << fmt(X(e.to))
                << "\" y2=\"" << fmt(Y(e.to)) << "\" stroke=\"" << *col[static_cast<int>(e.label)]
                << "\" stroke-width=\"" << fmt(style.stroke_width) << "\" stroke-linecap=\"round\"/>\n";
        }
    }

    if (t.region && !t.fragment_mode) {
        out << "<polygon points=\"";
        for (size_t i = 0; i < t.region->size(); i++) out << (i ? " " : "") << pt((*t.region)[i]);
        out << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"" << fmt(style.stroke_width * 1.6) << "\"/>\n";
    }

    if (style.segment_overlay) {
        for (const auto& seg : t.segments) {
            Vec2 n{-seg.u.y, seg.u.x};
            Vec2 p0 = seg.u * seg.tmin + n * seg.offset;
            Vec2 p1 = seg.u * seg.tmax + n * seg.offset;
            out << "<line x1=\"" << fmt(X(p0)) << "\" y1=\"" << fmt(Y(p0)) << "\" x2=\"" << fmt(X(p1)) << "\" y2=\""
                << fmt(Y(p1)) << "\" stroke=\"#999\" stroke-width=\"" << fmt(style.stroke_width * 0.6)
                << "\" stroke-dasharray=\"6 4\"/>\n";
        }
    }

    if (style.vertex_glyphs) {
        for (const auto& v : t.vertices) {
            const char* fill = "#bbb";
            double r = 2.6;
            switch (v.location) {
                case VertexLocation::Corner: fill = "#222"; r = 3.4; break;
                case VertexLocation::Boundary: fill = "#777"; break;
                case VertexLocation::InternalPi: fill = "#e0a63a"; break;
                case VertexLocation::Internal2Pi: fill = "#7a4ba0"; break;
                case VertexLocation::Open: fill = "#ddd"; break;
            }
            out << "<circle cx=\"" << fmt(X(v.pos)) << "\" cy=\"" << fmt(Y(v.pos)) << "\" r=\"" << fmt(r)
                << "\" fill=\"" << fill << "\"/>\n";
        }
    }

    for (const auto& [from, to] : pair_marks) {
        out << "<line x1=\"" << fmt(X(from)) << "\" y1=\"" << fmt(Y(from)) << "\" x2=\"" << fmt(X(to)) << "\" y2=\""
            << fmt(Y(to)) << "\" stroke=\"#a05a9c\" stroke-width=\"" << fmt(style.stroke_width)
            << "\" stroke-dasharray=\"2 3\"/>\n";
    }
    for (const auto& [from, to] : arrows) {
        Vec2 d = to - from;
        double len = d.norm();
        if (len <= 0) continue;
        Vec2 u = d * (1.0 / len);
        Vec2 n{-u.y, u.x};
        Vec2 tip = to, b1 = to - u * (8.0 / s) + n * (3.5 / s), b2 = to - u * (8.0 / s) - n * (3.5 / s);
        out << "<line x1=\"" << fmt(X(from)) << "\" y1=\"" << fmt(Y(from)) << "\" x2=\"" << fmt(X(to)) << "\" y2=\""
            << fmt(Y(to)) << "\" stroke=\"#333\" stroke-width=\"" << fmt(style.stroke_width) << "\"/>\n";
        out << "<polygon points=\"" << pt(tip) << " " << pt(b1) << " " << pt(b2) << "\" fill=\"#333\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace tritile
