#include "tritile/geom.hpp"

#include <cstdlib>
#include <string>

namespace tritile {

double default_eps() {
    static double eps = [] {
        if (const char* env = std::getenv("TRITILE_EPS")) {
            try {
                double v = std::stod(env);
                if (v > 0 && v < 0.1) return v;
            } catch (...) {
            }
        }
        return 1e-9;
    }();
    return eps;
}

bool lex_less(Vec2 p, Vec2 q, double eps) {
    if (p.x < q.x - eps) return true;
    if (p.x > q.x + eps) return false;
    return p.y < q.y - eps;
}

double polygon_area(const std::vector<Vec2>& poly) {
    double acc = 0.0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; i++) acc += poly[i].cross(poly[(i + 1) % n]);
    return 0.5 * acc;
}

bool point_in_polygon(Vec2 p, const std::vector<Vec2>& poly, double eps) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; i++) {
        if (point_segment_dist(p, poly[i], poly[(i + 1) % n]) <= eps) return true;
    }
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
            double xint = poly[j].x + (poly[i].x - poly[j].x) * (p.y - poly[j].y) / (poly[i].y - poly[j].y);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

double point_segment_dist(Vec2 p, Vec2 s0, Vec2 s1) {
    Vec2 d = s1 - s0;
    double len2 = d.dot(d);
    if (len2 == 0.0) return dist(p, s0);
    double t = (p - s0).dot(d) / len2;
    t = std::max(0.0, std::min(1.0, t));
    return dist(p, s0 + d * t);
}

std::vector<Vec2> clip_polygon_halfplane(const std::vector<Vec2>& poly, Vec2 p0, Vec2 p1) {
    // Keeps the side to the left of p0->p1.
    std::vector<Vec2> out;
    size_t n = poly.size();
    if (n == 0) return out;
    Vec2 d = p1 - p0;
    auto side = [&](Vec2 v) { return d.cross(v - p0); };
    for (size_t i = 0; i < n; i++) {
        Vec2 cur = poly[i], nxt = poly[(i + 1) % n];
        double sc = side(cur), sn = side(nxt);
        if (sc >= 0) out.push_back(cur);
        if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
            double t = sc / (sc - sn);
            out.push_back(cur + (nxt - cur) * t);
        }
    }
    return out;
}

double triangle_overlap_area(const Vec2* t1, const Vec2* t2) {
    std::vector<Vec2> poly(t1, t1 + 3);
    if (polygon_area(poly) < 0) std::swap(poly[1], poly[2]);
    Vec2 clip[3] = {t2[0], t2[1], t2[2]};
    if ((clip[1] - clip[0]).cross(clip[2] - clip[0]) < 0) std::swap(clip[1], clip[2]);
    for (int i = 0; i < 3 && !poly.empty(); i++) poly = clip_polygon_halfplane(poly, clip[i], clip[(i + 1) % 3]);
    if (poly.size() < 3) return 0.0;
    return std::abs(polygon_area(poly));
}

}  // namespace tritile
