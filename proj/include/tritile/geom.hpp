#pragma once

#include <cmath>
#include <vector>

namespace tritile {

constexpr double kPi = 3.14159265358979323846;

// Geometric tolerance. Angle logic is exact; eps only arbitrates coordinate
// coincidences. Overridable through the TRITILE_EPS environment variable.
double default_eps();

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend Vec2 operator*(double s, Vec2 v) { return v * s; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 unit_dir(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline double dist(Vec2 p, Vec2 q) { return (p - q).norm(); }

// Lexicographic (x, then y) with tolerance.
bool lex_less(Vec2 p, Vec2 q, double eps);

double polygon_area(const std::vector<Vec2>& poly);  // signed, positive for counterclockwise

bool point_in_polygon(Vec2 p, const std::vector<Vec2>& poly, double eps);  // true on boundary too

double point_segment_dist(Vec2 p, Vec2 s0, Vec2 s1);

// Area of triangle-triangle overlap via half-plane clipping.
double triangle_overlap_area(const Vec2* t1, const Vec2* t2);

// Intersection area of a convex clip triangle with a polygon.
std::vector<Vec2> clip_polygon_halfplane(const std::vector<Vec2>& poly, Vec2 p0, Vec2 p1);

}  // namespace tritile
