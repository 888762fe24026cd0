#include "tritile/invariant.hpp"

#include <algorithm>
#include <cmath>

namespace tritile {

ZhValue zh_edge(const DerivedEdge& e, AngleClass frame) {
    return Rat(zh_sign(angle_sub(e.dir, frame))) * SymLen::unit(e.label);
}

ZhValue zh_tile(const PlacedTile& t, AngleClass frame) {
    ZhValue v;
    for (const auto& e : t.edges) v += zh_edge(e, frame);
    return v;
}

ZhReport zh_report(const Tiling& t, std::optional<AngleClass> frame) {
    if (!t.region)
        throw TilingError(ErrKind::FrameError,
                          "zh report needs a region boundary to anchor the frame");
    auto walk = boundary_walk(t);
    ZhReport r;
    r.frame = frame ? *frame : walk.front().dir;
    for (const auto& tile : t.tiles) {
        TileZh tz{tile.id, tile.c_edge_dir(), zh_tile(tile, r.frame)};
        r.zh_tiling += tz.value;
        r.per_tile.push_back(std::move(tz));
    }
    for (const auto& step : walk)
        r.zh_boundary += Rat(zh_sign(angle_sub(step.dir, r.frame))) * step.len;
    return r;
}

ZhValue zh_kite_parallelogram_check(const PlacedTile& t1, const PlacedTile& t2, double eps) {
    const DerivedEdge* c1 = nullptr;
    const DerivedEdge* c2 = nullptr;
    for (const auto& e : t1.edges)
        if (e.label == SideLabel::C) c1 = &e;
    for (const auto& e : t2.edges)
        if (e.label == SideLabel::C) c2 = &e;
    if (angle_sub(c1->dir, c2->dir) != AngleClass{3, 0})
        throw TilingError(ErrKind::NotAKiteOrParallelogram,
                          "c edges are not anti-aligned: " + angle_to_string(c1->dir) + " vs " +
                              angle_to_string(c2->dir));
    if (eps < 0) eps = default_eps();
    double scale = std::max({1.0, c1->from.norm(), c1->to.norm(), c2->from.norm()});
    Vec2 u = c1->to - c1->from;
    double len = u.norm();
    for (Vec2 p : {c2->from, c2->to})
        if (std::abs(u.cross(p - c1->from)) / len > eps * scale)
            throw TilingError(ErrKind::NotAKiteOrParallelogram, "c edges are not collinear");
    return zh_tile(t1) + zh_tile(t2);
}

Matching match_c_internal(const Tiling& t) {
    Matching m;
    for (const auto& s : t.segments) {
        std::vector<int> lefts, rights;  // tile ids, in positional order
        for (const auto& f : s.left)
            if (f.label == SideLabel::C) lefts.push_back(f.tile);
        for (const auto& f : s.right)
            if (f.label == SideLabel::C) rights.push_back(f.tile);
        size_t k = 0;
        for (; k < lefts.size() && k < rights.size(); k++)
            m.pairs.push_back({lefts[k], rights[k]});
        for (size_t i = k; i < lefts.size(); i++) m.unmatched.push_back(lefts[i]);
        for (size_t i = k; i < rights.size(); i++) m.unmatched.push_back(rights[i]);
    }
    std::sort(m.unmatched.begin(), m.unmatched.end());
    return m;
}

Tiling sawtooth_augment(const Tiling& t) {
    if (!t.region) return t;
    auto walk = boundary_walk(t);
    for (const auto& step : walk)
        if (step.label != SideLabel::C)
            throw TilingError(ErrKind::BoundaryNotAllC,
                              std::string("boundary edge of tile ") + std::to_string(step.tile) +
                                  " carries " + side_char(step.label) + ", expected c");

    std::vector<Placement> ps = placements_of(t);
    std::vector<Vec2> region;
    for (const auto& step : walk) {
        Vec2 p = t.vertices[step.v_from].pos;
        Vec2 q = t.vertices[step.v_to].pos;
        // tooth anchored at the far end, c edge running back along the old
        // boundary edge, apex outside
        ps.push_back({q, angle_add(step.dir, {3, 0}), {SideLabel::C, SideLabel::A, SideLabel::B}});
        Vec2 apex = p + t.spec.a * unit_dir(angle_value(angle_add(step.dir, {5, 1}), t.spec.alpha));
        region.push_back(p);
        region.push_back(apex);
    }
    BuildOptions opts;
    opts.fragment_mode = t.fragment_mode;
    opts.eps = t.eps;
    return build_tiling(t.spec, ps, region, opts);
}

ZhValue sawtooth_profile_zh(const std::vector<std::pair<AngleClass, long>>& sides,
                            AngleClass frame) {
    ZhValue v;
    for (auto [cls, count] : sides) {
        ZhValue tooth = Rat(zh_sign(angle_sub(angle_add(cls, {5, 1}), frame))) * SymLen::unit(SideLabel::A) +
                        Rat(zh_sign(angle_sub(angle_add(cls, {0, 1}), frame))) * SymLen::unit(SideLabel::B);
        v += Rat(count) * tooth;
    }
    return v;
}

}  // namespace tritile
