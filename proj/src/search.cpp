#include <tritile/search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <thread>
#include <tuple>

namespace tritile {

std::string to_string(PruneRule r) {
    switch (r) {
        case PruneRule::AngleCensus: return "angle-census";
        case PruneRule::SegmentRelation: return "segment-relation";
        case PruneRule::ZhFeasibility: return "zh-feasibility";
    }
    return "?";
}

namespace {

constexpr double kAngTol = 1e-7;

double norm_angle(double t) {
    t = std::fmod(t, 2 * kPi);
    return t < 0 ? t + 2 * kPi : t;
}

Vec2 rotated(Vec2 v, double th) {
    return {v.x * std::cos(th) - v.y * std::sin(th), v.x * std::sin(th) + v.y * std::cos(th)};
}

// reflect across the axis whose doubled angle is mu2
Vec2 reflected(Vec2 v, double mu2) {
    return {v.x * std::cos(mu2) + v.y * std::sin(mu2), v.x * std::sin(mu2) - v.y * std::cos(mu2)};
}

// Region boundary directions must come from the tile's angle group, or no
// tiling can exist; snapping them once makes all wedge arithmetic exact.
AngleClass snap_direction(double theta, double alpha) {
    theta = norm_angle(theta);
    for (int m = 0; m <= 60; ++m) {
        int k = (m % 2 == 0) ? m / 2 : -(m + 1) / 2;
        double x = theta - k * alpha;
        int j0 = static_cast<int>(std::lround(x / (kPi / 3)));
        for (int j = j0 - 1; j <= j0 + 1; ++j) {
            AngleClass c = angle_class(j, k);
            double d = norm_angle(angle_value(c, alpha) - theta);
            if (d > kPi) d = 2 * kPi - d;
            if (d < kAngTol) return c;
        }
    }
    throw TilingError(ErrKind::InvalidSpec, "region edge direction is not generated by the tile angles");
}

struct RegionInfo {
    std::vector<Vec2> poly;  // counterclockwise
    std::vector<AngleClass> edge_dir;
    std::vector<AngleSpan> corner;  // interior span at poly[i]
    std::vector<double> edge_len;
    double area = 0;
    double diameter = 1;
};

RegionInfo prep_region(const TileSpec& spec, std::vector<Vec2> poly) {
    if (poly.size() < 3) throw TilingError(ErrKind::InvalidSpec, "region needs at least 3 corners");
    if (polygon_area(poly) < 0) std::reverse(poly.begin(), poly.end());
    RegionInfo rg;
    rg.poly = std::move(poly);
    rg.area = polygon_area(rg.poly);
    size_t n = rg.poly.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) rg.diameter = std::max(rg.diameter, dist(rg.poly[i], rg.poly[j]));
    rg.edge_dir.resize(n);
    rg.edge_len.resize(n);
    rg.corner.resize(n);
    for (size_t i = 0; i < n; ++i) {
        Vec2 e = rg.poly[(i + 1) % n] - rg.poly[i];
        rg.edge_len[i] = e.norm();
        if (rg.edge_len[i] < 1e-12)
            throw TilingError(ErrKind::InvalidSpec, "region has a degenerate edge");
        rg.edge_dir[i] = snap_direction(std::atan2(e.y, e.x), spec.alpha);
    }
    for (size_t i = 0; i < n; ++i) {
        const AngleClass& prev = rg.edge_dir[(i + n - 1) % n];
        const AngleClass& out = rg.edge_dir[i];
        // interior = prev + pi - out, lifted to the span matching the numeric angle
        AngleClass x = angle_sub(angle_add(prev, angle_class(3, 0)), out);
        double numeric = norm_angle(angle_value(angle_add(prev, angle_class(3, 0)), spec.alpha) -
                                    angle_value(out, spec.alpha));
        if (numeric < kAngTol) numeric = 2 * kPi;
        int m = static_cast<int>(std::lround((numeric - span_value({x.j, x.k}, spec.alpha)) / (2 * kPi)));
        AngleSpan s{x.j + 6 * m, x.k};
        if (std::abs(span_value(s, spec.alpha) - numeric) > 1e-6)
            throw TilingError(ErrKind::InvalidSpec, "region corner angle is not generated by the tile angles");
        rg.corner[i] = s;
    }
    return rg;
}

struct Ctx {
    const SearchConfig* cfg = nullptr;
    TileSpec spec;
    RegionInfo rg;
    double eps_w = 1e-9;
    double merge_tol = 1e-8;
    double area_tol = 1e-9;
    double tile_area = 0;
    double min_side = 0;
    double min_corner = 0;
    double abc_eval = 0;   // a - b + c
    double zh_target = 0;  // numeric zh of the region boundary, frame (0,0)
    std::vector<std::array<SideLabel, 3>> perms;
};

Ctx make_ctx(const SearchConfig& cfg) {
    Ctx cx;
    cx.cfg = &cfg;
    cx.spec = cfg.spec;
    cx.rg = prep_region(cfg.spec, cfg.region);
    double eps = cfg.eps < 0 ? default_eps() : cfg.eps;
    cx.eps_w = eps * std::max(1.0, cx.rg.diameter);
    cx.merge_tol = 10 * cx.eps_w;
    cx.area_tol = 50 * cx.eps_w * (cx.spec.a + cx.spec.b + cx.spec.c);
    cx.tile_area = 0.5 * cx.spec.a * cx.spec.b * std::sin(2 * kPi / 3);
    cx.min_side = std::min(cx.spec.a, cx.spec.b);
    cx.min_corner = std::min({span_value(span_alpha(), cx.spec.alpha),
                              span_value(span_beta(), cx.spec.alpha),
                              span_value(span_gamma(), cx.spec.alpha)});
    cx.abc_eval = cx.spec.a - cx.spec.b + cx.spec.c;
    for (size_t i = 0; i < cx.rg.poly.size(); ++i)
        cx.zh_target += zh_sign(cx.rg.edge_dir[i]) * cx.rg.edge_len[i];
    // one representative labeling per chirality; cyclic re-anchorings of a
    // placement describe the same tile, so more would triple every tiling
    using L = SideLabel;
    cx.perms = {{L::A, L::B, L::C}};
    if (cfg.allow_mirrored) cx.perms.push_back({L::A, L::C, L::B});
    return cx;
}

struct Arc {
    double s = 0;      // normalized start value
    double sweep = 0;  // (0, 2pi]
    AngleClass end_cls;
};

struct GapSlot {
    AngleClass start;
    double sweep = 0;
};

struct VertCov {
    Vec2 pos;
    std::vector<Arc> arcs;
    std::vector<GapSlot> gaps;
};

struct NodeView {
    std::vector<VertCov> verts;
    int frontier = -1;        // lex-least vertex with a gap
    double min_gap = 4 * kPi; // narrowest gap anywhere
};

NodeView view_of(const Ctx& cx, const std::vector<PlacedTile>& tiles) {
    NodeView nv;
    auto vert_at = [&](Vec2 p) -> VertCov& {
        for (auto& v : nv.verts)
            if (dist(v.pos, p) <= cx.merge_tol) return v;
        nv.verts.push_back({p, {}, {}});
        return nv.verts.back();
    };
    size_t n = cx.rg.poly.size();
    for (size_t i = 0; i < n; ++i) vert_at(cx.rg.poly[i]);
    for (const PlacedTile& t : tiles)
        for (const Vec2& v : t.verts) vert_at(v);

    double alpha = cx.spec.alpha;
    auto add_arc = [&](VertCov& v, AngleClass start, double sweep, AngleClass end) {
        v.arcs.push_back({norm_angle(angle_value(start, alpha)), sweep, end});
    };
    for (VertCov& v : nv.verts) {
        // region contribution: corners carry the exterior arc, edge-interior
        // points carry the outer half-plane
        bool at_corner = false;
        for (size_t i = 0; i < n; ++i) {
            if (dist(v.pos, cx.rg.poly[i]) <= cx.merge_tol) {
                AngleClass start = angle_add(cx.rg.edge_dir[(i + n - 1) % n], angle_class(3, 0));
                double sweep = 2 * kPi - span_value(cx.rg.corner[i], alpha);
                add_arc(v, start, sweep, cx.rg.edge_dir[i]);
                at_corner = true;
                break;
            }
        }
        if (!at_corner) {
            for (size_t i = 0; i < n; ++i) {
                const Vec2& p0 = cx.rg.poly[i];
                const Vec2& p1 = cx.rg.poly[(i + 1) % n];
                if (point_segment_dist(v.pos, p0, p1) <= cx.merge_tol)
                    add_arc(v, angle_add(cx.rg.edge_dir[i], angle_class(3, 0)), kPi, cx.rg.edge_dir[i]);
            }
        }
        for (const PlacedTile& t : tiles) {
            int corner = -1;
            for (int i = 0; i < 3; ++i)
                if (dist(v.pos, t.verts[i]) <= cx.merge_tol) corner = i;
            if (corner >= 0) {
                AngleSpan w = t.corner_angle(corner);
                add_arc(v, t.edges[corner].dir, span_value(w, alpha),
                        angle_add(t.edges[(corner + 2) % 3].dir, angle_class(3, 0)));
            } else {
                for (const DerivedEdge& e : t.edges) {
                    if (point_segment_dist(v.pos, e.from, e.to) <= cx.merge_tol) {
                        add_arc(v, e.dir, kPi, angle_add(e.dir, angle_class(3, 0)));
                        break;
                    }
                }
            }
        }
    }
    for (size_t vi = 0; vi < nv.verts.size(); ++vi) {
        VertCov& v = nv.verts[vi];
        if (v.arcs.empty()) continue;
        std::sort(v.arcs.begin(), v.arcs.end(), [](const Arc& a, const Arc& b) { return a.s < b.s; });
        double covered = 0;
        for (const Arc& a : v.arcs) covered += a.sweep;
        if (covered >= 2 * kPi - kAngTol) continue;
        for (size_t i = 0; i < v.arcs.size(); ++i) {
            double end = v.arcs[i].s + v.arcs[i].sweep;
            double next = (i + 1 < v.arcs.size()) ? v.arcs[i + 1].s : v.arcs[0].s + 2 * kPi;
            double gap = next - end;
            if (gap > kAngTol) {
                v.gaps.push_back({v.arcs[i].end_cls, gap});
                nv.min_gap = std::min(nv.min_gap, gap);
            }
        }
        if (!v.gaps.empty() &&
            (nv.frontier < 0 || lex_less(v.pos, nv.verts[nv.frontier].pos, cx.merge_tol)))
            nv.frontier = static_cast<int>(vi);
    }
    return nv;
}

bool proper_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double tol) {
    double d1 = (b - a).cross(c - a), d2 = (b - a).cross(d - a);
    double d3 = (d - c).cross(a - c), d4 = (d - c).cross(b - c);
    auto opp = [tol](double x, double y) { return (x > tol && y < -tol) || (x < -tol && y > tol); };
    return opp(d1, d2) && opp(d3, d4);
}

bool tile_fits(const Ctx& cx, const std::vector<PlacedTile>& tiles, const PlacedTile& t) {
    Vec2 g = (t.verts[0] + t.verts[1] + t.verts[2]) * (1.0 / 3.0);
    if (!point_in_polygon(g, cx.rg.poly, cx.merge_tol)) return false;
    for (const Vec2& v : t.verts)
        if (!point_in_polygon(v, cx.rg.poly, cx.merge_tol)) return false;
    size_t n = cx.rg.poly.size();
    double cross_tol = cx.eps_w * cx.rg.diameter;
    for (const DerivedEdge& e : t.edges)
        for (size_t i = 0; i < n; ++i)
            if (proper_cross(e.from, e.to, cx.rg.poly[i], cx.rg.poly[(i + 1) % n], cross_tol))
                return false;
    for (const PlacedTile& q : tiles)
        if (triangle_overlap_area(t.verts.data(), q.verts.data()) > cx.area_tol) return false;
    return true;
}

std::vector<Placement> candidates_at(const Ctx& cx, const std::vector<PlacedTile>& tiles, Vec2 p,
                                     const GapSlot& slot) {
    std::vector<Placement> out;
    double alpha = cx.spec.alpha;
    for (const auto& labels : cx.perms) {
        for (int ci = 0; ci < 3; ++ci) {
            AngleSpan w = angle_of(labels[(ci + 1) % 3]);
            if (span_value(w, alpha) > slot.sweep + kAngTol) continue;
            std::array<AngleClass, 3> d;
            std::array<Vec2, 3> v;
            d[ci] = slot.start;
            v[ci] = p;
            for (int s = 0; s < 2; ++s) {
                int i = (ci + s) % 3, ni = (i + 1) % 3;
                v[ni] = v[i] + cx.spec.side(labels[i]) * unit_dir(angle_value(d[i], alpha));
                AngleSpan head = angle_of(labels[(i + 2) % 3]);
                d[ni] = angle_add(d[i], angle_class(3 - head.j, -head.k));
            }
            Placement cand{v[0], d[0], labels};
            PlacedTile t = derive_tile(cx.spec, cand, static_cast<int>(tiles.size()), 100 * cx.eps_w);
            if (tile_fits(cx, tiles, t)) out.push_back(cand);
        }
    }
    return out;
}

// uncovered straight runs on region sides; a run shorter than every tile
// side can never be covered, since tiles cannot overhang the region
bool region_side_dead(const Ctx& cx, const std::vector<PlacedTile>& tiles) {
    size_t n = cx.rg.poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& p0 = cx.rg.poly[i];
        const Vec2& p1 = cx.rg.poly[(i + 1) % n];
        double len = cx.rg.edge_len[i];
        Vec2 u = (p1 - p0) * (1.0 / len);
        AngleClass fwd = cx.rg.edge_dir[i];
        AngleClass bwd = angle_negate_dir(fwd);
        std::vector<std::pair<double, double>> iv;
        for (const PlacedTile& t : tiles) {
            for (const DerivedEdge& e : t.edges) {
                if (e.dir != fwd && e.dir != bwd) continue;
                if (point_segment_dist(e.from, p0, p1) > cx.merge_tol) continue;
                if (point_segment_dist(e.to, p0, p1) > cx.merge_tol) continue;
                double t0 = (e.from - p0).dot(u), t1 = (e.to - p0).dot(u);
                if (t0 > t1) std::swap(t0, t1);
                t0 = std::max(t0, 0.0);
                t1 = std::min(t1, len);
                if (t1 - t0 > cx.merge_tol) iv.emplace_back(t0, t1);
            }
        }
        std::sort(iv.begin(), iv.end());
        double at = 0;
        auto dead_piece = [&](double hole) {
            return hole > cx.merge_tol && hole < cx.min_side - cx.merge_tol;
        };
        for (const auto& [t0, t1] : iv) {
            if (dead_piece(t0 - at)) return true;
            at = std::max(at, t1);
        }
        if (dead_piece(len - at)) return true;
    }
    return false;
}

struct Walker {
    const Ctx* cx = nullptr;
    std::atomic<long>* nodes = nullptr;
    std::atomic<bool>* budget_hit = nullptr;
    std::array<long, 3> pruned{};
    std::vector<std::vector<Placement>> found;
    std::vector<Placement> placed;
    std::vector<PlacedTile> tiles;
    bool naive = false;

    bool has(PruneRule r) const { return !naive && cx->cfg->pruning.count(r) > 0; }

    void place(const Placement& p) {
        tiles.push_back(derive_tile(cx->spec, p, static_cast<int>(tiles.size()), 100 * cx->eps_w));
        placed.push_back(p);
    }
    void unplace() {
        tiles.pop_back();
        placed.pop_back();
    }

    void dfs() {
        long count = nodes->fetch_add(1) + 1;
        if (cx->cfg->max_nodes > 0 && count > cx->cfg->max_nodes) {
            budget_hit->store(true);
            return;
        }
        NodeView nv = view_of(*cx, tiles);
        if (nv.frontier < 0) {
            // all wedges closed; with pairwise-disjoint in-region tiles the
            // area must match, but check before claiming a tiling
            double covered = static_cast<double>(tiles.size()) * cx->tile_area;
            if (std::abs(covered - cx->rg.area) <= 1e-6 * std::max(1.0, cx->rg.area))
                found.push_back(placed);
            return;
        }
        if (static_cast<int>(tiles.size()) >= cx->cfg->max_tiles) return;
        if (has(PruneRule::AngleCensus) && nv.min_gap < cx->min_corner - kAngTol) {
            pruned[0]++;
            return;
        }
        if (has(PruneRule::SegmentRelation) && region_side_dead(*cx, tiles)) {
            pruned[1]++;
            return;
        }
        if (has(PruneRule::ZhFeasibility)) {
            double zh = 0;
            for (const PlacedTile& t : tiles) zh += zh_sign(t.c_edge_dir()) * cx->abc_eval;
            int remaining = cx->cfg->max_tiles - static_cast<int>(tiles.size());
            if (std::abs(cx->zh_target - zh) > remaining * cx->abc_eval + 1e-6) {
                pruned[2]++;
                return;
            }
        }
        const VertCov& fv = nv.verts[nv.frontier];
        size_t nslots = naive ? fv.gaps.size() : 1;
        for (size_t gi = 0; gi < nslots; ++gi) {
            for (const Placement& c : candidates_at(*cx, tiles, fv.pos, fv.gaps[gi])) {
                place(c);
                dfs();
                unplace();
            }
        }
    }
};

using PKey = std::vector<std::tuple<long long, long long, int, int, int>>;

PKey key_of(const Ctx& cx, const std::vector<Placement>& pl) {
    double grid = 1e-6 * std::max(1.0, cx.rg.diameter);
    PKey k;
    for (const Placement& raw : pl) {
        Placement p = canonical_placement(cx.spec, raw);
        int enc = static_cast<int>(p.labels[0]) * 9 + static_cast<int>(p.labels[1]) * 3 +
                  static_cast<int>(p.labels[2]);
        k.emplace_back(std::llround(p.anchor.x / grid), std::llround(p.anchor.y / grid), p.dir.j,
                       p.dir.k, enc);
    }
    std::sort(k.begin(), k.end());
    return k;
}

SearchResult finalize(const Ctx& cx, const std::vector<std::vector<Placement>>& raw,
                      SearchStats stats, std::chrono::steady_clock::time_point t0) {
    SearchResult res;
    std::vector<RegionSym> syms = region_symmetries(cx.spec, cx.rg.poly, cx.cfg->eps);
    std::vector<PKey> kept;
    for (const auto& pl : raw) {
        bool dup = false;
        for (const RegionSym& s : syms) {
            std::vector<Placement> img;
            img.reserve(pl.size());
            for (const Placement& p : pl) img.push_back(apply_symmetry(cx.spec, s, p));
            PKey k = key_of(cx, img);
            for (const PKey& have : kept)
                if (have == k) dup = true;
            if (dup) break;
        }
        if (dup) continue;
        kept.push_back(key_of(cx, pl));
        res.tilings.push_back(build_tiling(cx.spec, pl, cx.rg.poly,
                                           {false, cx.cfg->eps < 0 ? default_eps() : cx.cfg->eps}));
    }
    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.stats = std::move(stats);
    return res;
}

SearchStats base_stats(const Ctx& cx, bool naive) {
    SearchStats st;
    if (!naive)
        for (PruneRule r : cx.cfg->pruning) st.pruned[r] = 0;
    return st;
}

}  // namespace

std::vector<RegionSym> region_symmetries(const TileSpec& spec, const std::vector<Vec2>& region,
                                         double eps) {
    RegionInfo rg = prep_region(spec, region);
    double tol = (eps < 0 ? default_eps() : eps) * std::max(1.0, rg.diameter) * 100;
    size_t n = rg.poly.size();
    Vec2 g{0, 0};
    for (const Vec2& p : rg.poly) g = g + p;
    g = g * (1.0 / static_cast<double>(n));
    std::vector<RegionSym> out;
    for (size_t s = 0; s < n; ++s) {
        AngleClass rot = angle_sub(rg.edge_dir[s], rg.edge_dir[0]);
        double th = angle_value(rot, spec.alpha);
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            ok = dist(g + rotated(rg.poly[i] - g, th), rg.poly[(i + s) % n]) <= tol;
        if (ok) out.push_back({false, rot, g});

        AngleClass m = angle_add(rg.edge_dir[0],
                                 angle_add(rg.edge_dir[(s + n - 1) % n], angle_class(3, 0)));
        double mu2 = angle_value(m, spec.alpha);
        ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            ok = dist(g + reflected(rg.poly[i] - g, mu2), rg.poly[(s + n - i) % n]) <= tol;
        if (ok) out.push_back({true, m, g});
    }
    return out;
}

Placement apply_symmetry(const TileSpec& spec, const RegionSym& s, const Placement& p) {
    if (!s.reflection) {
        double th = angle_value(s.cls, spec.alpha);
        return {s.center + rotated(p.anchor - s.center, th), angle_add(p.dir, s.cls), p.labels};
    }
    PlacedTile t = derive_tile(spec, p, 0, 1e-6 * (spec.a + spec.b + spec.c));
    double mu2 = angle_value(s.cls, spec.alpha);
    Vec2 anchor = s.center + reflected(t.verts[0] - s.center, mu2);
    AngleClass dir = angle_sub(s.cls, angle_add(t.edges[2].dir, angle_class(3, 0)));
    return {anchor, dir, {p.labels[2], p.labels[1], p.labels[0]}};
}

std::vector<Placement> frontier_placements(const SearchState& state) {
    Ctx cx = make_ctx(*state.cfg);
    std::vector<PlacedTile> tiles;
    for (size_t i = 0; i < state.placed.size(); ++i)
        tiles.push_back(derive_tile(cx.spec, state.placed[i], static_cast<int>(i), 100 * cx.eps_w));
    NodeView nv = view_of(cx, tiles);
    if (nv.frontier < 0) return {};
    const VertCov& fv = nv.verts[nv.frontier];
    return candidates_at(cx, tiles, fv.pos, fv.gaps.front());
}

SearchResult enumerate(const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Ctx cx = make_ctx(cfg);
    SearchStats stats = base_stats(cx, false);
    if (cfg.max_tiles * cx.tile_area < cx.rg.area - 1e-9 * std::max(1.0, cx.rg.area))
        return finalize(cx, {}, stats, t0);

    std::atomic<long> nodes{0};
    std::atomic<bool> budget_hit{false};
    Walker root;
    root.cx = &cx;
    root.nodes = &nodes;
    root.budget_hit = &budget_hit;

    std::vector<std::vector<Placement>> raw;
    if (cfg.worker_count <= 1) {
        root.dfs();
        raw = std::move(root.found);
        for (size_t i = 0; i < 3; ++i) {
            PruneRule r = static_cast<PruneRule>(i);
            if (stats.pruned.count(r)) stats.pruned[r] += root.pruned[i];
        }
    } else {
        // explore root subtrees in parallel; buckets are merged in candidate
        // order, so the output cannot depend on thread scheduling
        nodes.fetch_add(1);
        NodeView nv = view_of(cx, {});
        std::vector<Placement> roots;
        if (nv.frontier >= 0)
            roots = candidates_at(cx, {}, nv.verts[nv.frontier].pos,
                                  nv.verts[nv.frontier].gaps.front());
        std::vector<Walker> workers(roots.size());
        size_t nw = std::min<size_t>(std::max(cfg.worker_count, 1), std::max<size_t>(roots.size(), 1));
        std::vector<std::thread> pool;
        for (size_t w = 0; w < nw; ++w) {
            pool.emplace_back([&, w]() {
                for (size_t r = w; r < roots.size(); r += nw) {
                    Walker& wk = workers[r];
                    wk.cx = &cx;
                    wk.nodes = &nodes;
                    wk.budget_hit = &budget_hit;
                    wk.place(roots[r]);
                    wk.dfs();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const Walker& wk : workers) {
            for (const auto& f : wk.found) raw.push_back(f);
            for (size_t i = 0; i < 3; ++i) {
                PruneRule r = static_cast<PruneRule>(i);
                if (stats.pruned.count(r)) stats.pruned[r] += wk.pruned[i];
            }
        }
    }
    stats.nodes = nodes.load();
    stats.complete = !budget_hit.load();
    return finalize(cx, raw, stats, t0);
}

SearchResult enumerate_naive(const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    Ctx cx = make_ctx(cfg);
    SearchStats stats = base_stats(cx, true);
    std::atomic<long> nodes{0};
    std::atomic<bool> budget_hit{false};
    Walker w;
    w.cx = &cx;
    w.nodes = &nodes;
    w.budget_hit = &budget_hit;
    w.naive = true;
    w.dfs();
    stats.nodes = nodes.load();
    stats.complete = !budget_hit.load();
    return finalize(cx, w.found, stats, t0);
}

}  // namespace tritile
