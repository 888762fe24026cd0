#include "tritile/generators.hpp"

#include <stdexcept>
#include <string>

namespace tritile {

namespace {

Vec2 ray(const TileSpec& spec, AngleClass d) { return unit_dir(angle_value(d, spec.alpha)); }

std::vector<SymLen> side_lens(std::initializer_list<SideLabel> ls) {
    std::vector<SymLen> out;
    for (auto l : ls) out.push_back(SymLen::unit(l));
    return out;
}

}  // namespace

Tiling gen_quadratic(int n, const TileSpec& spec, AngleClass frame) {
    if (n < 1) throw TilingError(ErrKind::InvalidSpec, "quadratic tiling needs n >= 1");
    const Vec2 p{0, 0};
    const Vec2 u = spec.a * ray(spec, frame);                   // along the a side
    const Vec2 w = spec.c * ray(spec, angle_add(frame, {1, -1}));  // along the reversed c side
    std::vector<Placement> ps;
    ps.reserve(size_t(n) * n);
    // upward copies translate the base tile over the (u, w) lattice; the gaps
    // between them are exactly the half-turn image anchored at the far corner.
    for (int i = 0; i < n; i++)
        for (int j = 0; i + j < n; j++)
            ps.push_back({p + double(i) * u + double(j) * w, frame, {SideLabel::A, SideLabel::B, SideLabel::C}});
    for (int i = 0; i + 1 < n; i++)
        for (int j = 0; i + j + 2 <= n; j++)
            ps.push_back({p + double(i + 1) * u + double(j + 1) * w, angle_add(frame, {3, 0}),
                          {SideLabel::A, SideLabel::B, SideLabel::C}});
    std::vector<Vec2> region{p, p + double(n) * u, p + double(n) * w};
    Tiling t = build_tiling(spec, ps, region);
    Rat nn = rat(n);
    t.region_side_len = {nn * SymLen::unit(SideLabel::A), nn * SymLen::unit(SideLabel::B),
                         nn * SymLen::unit(SideLabel::C)};
    return t;
}

Tiling gen_kite(const TileSpec& spec, AngleClass frame) {
    const Vec2 p{0, 0};
    std::vector<Placement> ps{
        {p, frame, {SideLabel::B, SideLabel::A, SideLabel::C}},                     // mirrored half
        {p, angle_add(frame, {0, 1}), {SideLabel::C, SideLabel::A, SideLabel::B}},  // direct half
    };
    Vec2 q = p + spec.b * ray(spec, frame);
    Vec2 r = q + spec.a * ray(spec, angle_add(frame, {1, 0}));
    Vec2 s = r + spec.a * ray(spec, angle_add(frame, {2, 2}));
    Tiling t = build_tiling(spec, ps, std::vector<Vec2>{p, q, r, s});
    t.region_side_len = side_lens({SideLabel::B, SideLabel::A, SideLabel::A, SideLabel::B});
    return t;
}

Tiling gen_parallelogram(const TileSpec& spec, AngleClass frame, SideLabel shared_side) {
    // rotate the direct label cycle so the shared side is walked first
    std::array<SideLabel, 3> labels;
    for (int i = 0; i < 3; i++) labels[i] = SideLabel((int(shared_side) + i) % 3);
    const Vec2 p{0, 0};
    Vec2 q = p + spec.side(shared_side) * ray(spec, frame);
    std::vector<Placement> ps{
        {p, frame, labels},
        {q, angle_add(frame, {3, 0}), labels},  // half-turn about the shared edge midpoint
    };
    Tiling t = build_tiling(spec, ps, std::nullopt, {.fragment_mode = true});
    // region corners: the two free corners sit on opposite sides of the
    // shared diagonal; reuse the derived tile vertices so they snap exactly.
    Vec2 r = t.tiles[0].verts[2], s = t.tiles[1].verts[2];
    std::vector<Vec2> region{p, s, q, r};
    SideLabel l1 = labels[1], l2 = labels[2];
    t = build_tiling(spec, placements_of(t), region);
    t.region_side_len = side_lens({l1, l2, l1, l2});
    return t;
}

Tiling gen_ring(int x, const TileSpec& spec, AngleClass frame) {
    if (x < 1) throw TilingError(ErrKind::InvalidSpec, "ring needs x >= 1");
    const double side = x * spec.c;
    std::vector<Vec2> corners{{0, 0}};
    std::vector<AngleClass> cls{frame, angle_add(frame, {2, 0}), angle_add(frame, {4, 0})};
    corners.push_back(corners[0] + side * ray(spec, cls[0]));
    corners.push_back(corners[1] + side * ray(spec, cls[1]));
    std::vector<Placement> ps;
    for (int s = 0; s < 3; s++)
        for (int i = 0; i < x; i++)
            ps.push_back({corners[s] + double(i) * spec.c * ray(spec, cls[s]), cls[s],
                          {SideLabel::C, SideLabel::A, SideLabel::B}});
    Tiling t = build_tiling(spec, ps, corners, {.fragment_mode = true});
    Rat xx = rat(x);
    t.region_side_len = {xx * SymLen::unit(SideLabel::C), xx * SymLen::unit(SideLabel::C),
                         xx * SymLen::unit(SideLabel::C)};
    return t;
}

Tiling gen_appendix_fixture(const TileSpec& spec) {
    const Vec2 x{0, 0};
    std::vector<Placement> ps{
        {x, {0, 0}, {SideLabel::B, SideLabel::A, SideLabel::C}},
        {x, {0, 1}, {SideLabel::C, SideLabel::A, SideLabel::B}},
        {x, {0, 2}, {SideLabel::B, SideLabel::A, SideLabel::C}},
        {x, {0, 3}, {SideLabel::C, SideLabel::B, SideLabel::A}},
        {x, {1, 2}, {SideLabel::A, SideLabel::B, SideLabel::C}},
        {x, {2, 1}, {SideLabel::C, SideLabel::B, SideLabel::A}},
        // the tile underneath: its c edge runs along the x-axis from c-a back
        // to -a, so X lies strictly inside it (needs a < c, true for any spec)
        {{spec.c - spec.a, 0}, {3, 0}, {SideLabel::C, SideLabel::A, SideLabel::B}},
    };
    return build_tiling(spec, ps, std::nullopt, {.fragment_mode = true});
}

Tiling gen_extension_patch(const TileSpec& spec) {
    const Vec2 q{0, 0};
    std::vector<Placement> ps{
        {q, {0, 0}, {SideLabel::A, SideLabel::B, SideLabel::C}},   // beta wedge over the +x axis
        {q, {1, -1}, {SideLabel::B, SideLabel::C, SideLabel::A}},  // gamma wedge in the middle
        {q, {3, -1}, {SideLabel::B, SideLabel::A, SideLabel::C}},  // alpha wedge over the -x axis
    };
    return build_tiling(spec, ps, std::nullopt, {.fragment_mode = true});
}

WorkedExampleReport worked_example_arithmetic() {
    WorkedExampleReport r;
    const Rat a = rat(3), b = rat(5), c = rat(7);
    r.L = 27 * a + b + 7 * c;
    r.N = 1215;
    r.area_lhs = rat(r.N) * a * b;  // twice the region area over sin(pi/3)
    r.area_rhs = r.L * r.L;
    // boundary invariant: the three sides run at 0, 2pi/3, 4pi/3, so the
    // half-turn signs are (+1, +1, +1)
    r.zh_boundary_big = 3 * r.L;
    // one of the nine congruent trapezoids, long side on the x-axis: sides
    // (49, 15, 34, 15) at 0, 2pi/3, pi, 4pi/3 give signs (+1, +1, -1, +1)
    r.zh_trapezoid = rat(49) + rat(15) - rat(34) + rat(15);
    r.consistent = r.area_lhs == r.area_rhs && r.zh_trapezoid * 9 == r.zh_boundary_big &&
                   r.L == rat(135) && r.area_lhs == rat(18225) && r.zh_trapezoid == rat(45);
    return r;
}

}  // namespace tritile
