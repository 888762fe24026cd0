#include "tritile/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace tritile {

std::string to_string(ErrKind k) {
    switch (k) {
        case ErrKind::InvalidSpec: return "InvalidSpec";
        case ErrKind::ParseError: return "ParseError";
        case ErrKind::OverlapError: return "OverlapError";
        case ErrKind::CoverageError: return "CoverageError";
        case ErrKind::DanglingEdgeError: return "DanglingEdgeError";
        case ErrKind::SnapAmbiguity: return "SnapAmbiguity";
        case ErrKind::NonSimpleBoundary: return "NonSimpleBoundary";
        case ErrKind::FrameError: return "FrameError";
        case ErrKind::NotAKiteOrParallelogram: return "NotAKiteOrParallelogram";
        case ErrKind::BoundaryNotAllC: return "BoundaryNotAllC";
        case ErrKind::ClassificationError: return "ClassificationError";
        case ErrKind::InconsistentRelations: return "InconsistentRelations";
    }
    return "UnknownError";
}

bool placement_mirrored(const std::array<SideLabel, 3>& labels) {
    return (static_cast<int>(labels[0]) + 1) % 3 != static_cast<int>(labels[1]);
}

std::string labels_to_string(const std::array<SideLabel, 3>& labels) {
    return {side_char(labels[0]), side_char(labels[1]), side_char(labels[2])};
}

std::array<SideLabel, 3> labels_from_string(const std::string& s) {
    if (s.size() != 3) throw TilingError(ErrKind::ParseError, "labels_order must have 3 characters, got '" + s + "'");
    for (char ch : s)
        if (ch != 'a' && ch != 'b' && ch != 'c')
            throw TilingError(ErrKind::ParseError, "labels_order may only contain abc, got '" + s + "'");
    std::array<SideLabel, 3> out{side_from_char(s[0]), side_from_char(s[1]), side_from_char(s[2])};
    if (out[0] == out[1] || out[1] == out[2] || out[0] == out[2])
        throw TilingError(ErrKind::ParseError, "labels_order must be a permutation of abc, got '" + s + "'");
    return out;
}

AngleSpan angle_of(SideLabel s) {
    switch (s) {
        case SideLabel::A: return span_alpha();
        case SideLabel::B: return span_beta();
        default: return span_gamma();
    }
}

AngleSpan PlacedTile::corner_angle(int i) const { return angle_of(p.labels[(i + 1) % 3]); }

AngleClass PlacedTile::c_edge_dir() const {
    for (const auto& e : edges)
        if (e.label == SideLabel::C) return e.dir;
    return edges[0].dir;  // unreachable for a valid permutation
}

PlacedTile derive_tile(const TileSpec& spec, const Placement& p, int id, double eps_close) {
    if (p.labels[0] == p.labels[1] || p.labels[1] == p.labels[2] || p.labels[0] == p.labels[2])
        throw TilingError(ErrKind::ParseError, "tile " + std::to_string(id) + ": labels_order is not a permutation");
    PlacedTile t;
    t.id = id;
    t.p = p;
    t.mirrored = placement_mirrored(p.labels);
    AngleClass d = p.dir;
    Vec2 pos = p.anchor;
    for (int i = 0; i < 3; i++) {
        DerivedEdge& e = t.edges[i];
        e.tile = id;
        e.e = i;
        e.label = p.labels[i];
        e.dir = d;
        e.from = pos;
        t.verts[i] = pos;
        pos = pos + unit_dir(angle_value(d, spec.alpha)) * spec.side(p.labels[i]);
        e.to = pos;
        AngleSpan interior = angle_of(p.labels[(i + 2) % 3]);  // angle at the head vertex
        d = angle_add(d, angle_class(3 - interior.j, -interior.k));
    }
    if (dist(pos, p.anchor) > eps_close)
        throw TilingError(ErrKind::InvalidSpec,
                          "tile " + std::to_string(id) + " does not close; side data inconsistent");
    return t;
}

Placement canonical_placement(const TileSpec& spec, const Placement& p) {
    if (p.labels[0] == SideLabel::A) return p;
    PlacedTile t = derive_tile(spec, p, 0, 1e-6 * (spec.a + spec.b + spec.c));
    for (int i = 0; i < 3; ++i)
        if (t.edges[i].label == SideLabel::A)
            return {t.edges[i].from, t.edges[i].dir,
                    {p.labels[i], p.labels[(i + 1) % 3], p.labels[(i + 2) % 3]}};
    return p;
}

namespace {

struct DSU {
    std::vector<int> parent;
    explicit DSU(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int Tiling::vertex_at(Vec2 p) const {
    for (size_t i = 0; i < vertices.size(); i++)
        if (dist(vertices[i].pos, p) <= eps_world) return static_cast<int>(i);
    return -1;
}

Tiling build_tiling(const TileSpec& spec, const std::vector<Placement>& placements,
                    std::optional<std::vector<Vec2>> region, BuildOptions opt) {
    double eps = opt.eps > 0 ? opt.eps : default_eps();
    SpecReport sr = check_tile_spec(spec, eps);
    if (!sr.ok) {
        std::string msg = "tile spec invalid:";
        for (const auto& e : sr.errors) msg += " " + e + ";";
        throw TilingError(ErrKind::InvalidSpec, msg);
    }

    Tiling t;
    t.spec = spec;
    t.fragment_mode = opt.fragment_mode;
    t.eps = eps;

    if (region) {
        if (region->size() < 3) throw TilingError(ErrKind::ParseError, "region needs at least 3 points");
        if (polygon_area(*region) < 0) std::reverse(region->begin(), region->end());
        t.region = region;
    }

    // Scale-aware tolerance.
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    auto feed = [&](Vec2 v) {
        lo_x = std::min(lo_x, v.x);
        hi_x = std::max(hi_x, v.x);
        lo_y = std::min(lo_y, v.y);
        hi_y = std::max(hi_y, v.y);
    };
    for (const auto& p : placements) feed(p.anchor);
    if (t.region)
        for (auto v : *t.region) feed(v);
    double diam = placements.empty() && !t.region ? 1.0 : std::hypot(hi_x - lo_x, hi_y - lo_y) + spec.c;
    t.eps_world = eps * std::max(1.0, diam);

    t.tiles.reserve(placements.size());
    for (size_t i = 0; i < placements.size(); i++)
        t.tiles.push_back(derive_tile(spec, placements[i], static_cast<int>(i), 10 * t.eps_world));

    // Vertex snapping: cluster all tile corners (plus region corners) that
    // fall within eps_world of each other; nearby-but-distinct clusters are an
    // error rather than a silent merge.
    std::vector<Vec2> pts;
    std::vector<std::pair<int, int>> pt_src;  // (tile, corner) or (-1, region index)
    for (const auto& tile : t.tiles)
        for (int i = 0; i < 3; i++) {
            pts.push_back(tile.verts[i]);
            pt_src.push_back({tile.id, i});
        }
    if (t.region)
        for (size_t i = 0; i < t.region->size(); i++) {
            pts.push_back((*t.region)[i]);
            pt_src.push_back({-1, static_cast<int>(i)});
        }

    size_t np = pts.size();
    DSU dsu(np);
    std::vector<int> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return pts[i].x < pts[j].x; });
    double guard = 10 * t.eps_world;
    for (size_t oi = 0; oi < np; oi++) {
        for (size_t oj = oi + 1; oj < np; oj++) {
            int i = order[oi], j = order[oj];
            if (pts[j].x - pts[i].x > guard) break;
            if (dist(pts[i], pts[j]) <= t.eps_world) dsu.unite(i, j);
        }
    }
    std::map<int, int> root_to_vid;
    std::vector<int> pt_vid(np);
    for (size_t i = 0; i < np; i++) {
        int r = dsu.find(static_cast<int>(i));
        auto it = root_to_vid.find(r);
        if (it == root_to_vid.end()) {
            int vid = static_cast<int>(t.vertices.size());
            root_to_vid[r] = vid;
            VertexInfo vi;
            vi.pos = pts[i];
            t.vertices.push_back(vi);
            pt_vid[i] = vid;
        } else {
            pt_vid[i] = it->second;
        }
    }
    // Ambiguity guard: distinct snapped vertices must stay clearly apart.
    {
        std::vector<int> vorder(t.vertices.size());
        std::iota(vorder.begin(), vorder.end(), 0);
        std::sort(vorder.begin(), vorder.end(),
                  [&](int i, int j) { return t.vertices[i].pos.x < t.vertices[j].pos.x; });
        for (size_t oi = 0; oi < vorder.size(); oi++)
            for (size_t oj = oi + 1; oj < vorder.size(); oj++) {
                Vec2 pi = t.vertices[vorder[oi]].pos, pj = t.vertices[vorder[oj]].pos;
                if (pj.x - pi.x > guard) break;
                double d = dist(pi, pj);
                if (d < guard)
                    throw TilingError(ErrKind::SnapAmbiguity,
                                      "vertices " + std::to_string(d / t.eps_world) +
                                          " eps apart; cannot snap safely");
            }
    }
    for (size_t i = 0; i < np; i++) {
        auto [tile, corner] = pt_src[i];
        if (tile >= 0) {
            t.tiles[tile].edges[corner].v_from = pt_vid[i];
            t.tiles[tile].edges[(corner + 2) % 3].v_to = pt_vid[i];
            t.vertices[pt_vid[i]].wedges.push_back({tile, corner});
        }
    }

    // Pairwise interior disjointness.
    double area_tol = 10 * t.eps_world * std::max(1.0, diam);
    for (size_t i = 0; i < t.tiles.size(); i++) {
        for (size_t j = i + 1; j < t.tiles.size(); j++) {
            const auto &ti = t.tiles[i], &tj = t.tiles[j];
            double lo_ix = std::min({ti.verts[0].x, ti.verts[1].x, ti.verts[2].x});
            double hi_ix = std::max({ti.verts[0].x, ti.verts[1].x, ti.verts[2].x});
            double lo_jx = std::min({tj.verts[0].x, tj.verts[1].x, tj.verts[2].x});
            double hi_jx = std::max({tj.verts[0].x, tj.verts[1].x, tj.verts[2].x});
            if (lo_jx > hi_ix + t.eps_world || lo_ix > hi_jx + t.eps_world) continue;
            double lo_iy = std::min({ti.verts[0].y, ti.verts[1].y, ti.verts[2].y});
            double hi_iy = std::max({ti.verts[0].y, ti.verts[1].y, ti.verts[2].y});
            double lo_jy = std::min({tj.verts[0].y, tj.verts[1].y, tj.verts[2].y});
            double hi_jy = std::max({tj.verts[0].y, tj.verts[1].y, tj.verts[2].y});
            if (lo_jy > hi_iy + t.eps_world || lo_iy > hi_jy + t.eps_world) continue;
            double ov = triangle_overlap_area(ti.verts.data(), tj.verts.data());
            if (ov > area_tol)
                throw TilingError(ErrKind::OverlapError, "tiles " + std::to_string(i) + " and " + std::to_string(j) +
                                                             " overlap with area " + std::to_string(ov));
        }
    }

    // Maximal segments: group edges by carrier line (direction class mod pi
    // first, numeric offset second), then split each line into connected runs.
    struct LineKey {
        int j, k;
        bool operator<(const LineKey& o) const { return j != o.j ? j < o.j : k < o.k; }
    };
    struct RawFrag {
        Fragment f;
        double offset;
    };
    std::map<LineKey, std::vector<RawFrag>> by_class;
    for (const auto& tile : t.tiles) {
        for (const auto& e : tile.edges) {
            bool forward = e.dir.j < 3;
            AngleClass cdir = forward ? e.dir : angle_class(e.dir.j - 3, e.dir.k);
            Vec2 u = unit_dir(angle_value(cdir, spec.alpha));
            Vec2 p_from = t.vertices[e.v_from].pos, p_to = t.vertices[e.v_to].pos;
            RawFrag rf;
            rf.f.tile = e.tile;
            rf.f.e = e.e;
            rf.f.label = e.label;
            rf.f.forward = forward;
            double tf = u.dot(p_from), tt = u.dot(p_to);
            rf.f.t0 = std::min(tf, tt);
            rf.f.t1 = std::max(tf, tt);
            rf.f.v_lo = tf < tt ? e.v_from : e.v_to;
            rf.f.v_hi = tf < tt ? e.v_to : e.v_from;
            rf.offset = 0.5 * (u.cross(p_from) + u.cross(p_to));
            by_class[{cdir.j, cdir.k}].push_back(rf);
        }
    }
    for (auto& [key, frags] : by_class) {
        std::sort(frags.begin(), frags.end(), [](const RawFrag& x, const RawFrag& y) { return x.offset < y.offset; });
        size_t i = 0;
        while (i < frags.size()) {
            size_t j = i + 1;
            while (j < frags.size() && frags[j].offset - frags[j - 1].offset <= 2 * t.eps_world) j++;
            // one geometric line: frags[i..j)
            std::vector<Fragment> line;
            for (size_t q = i; q < j; q++) line.push_back(frags[q].f);
            std::sort(line.begin(), line.end(), [](const Fragment& x, const Fragment& y) { return x.t0 < y.t0; });
            size_t s = 0;
            while (s < line.size()) {
                double reach = line[s].t1;
                size_t e2 = s + 1;
                while (e2 < line.size() && line[e2].t0 <= reach + t.eps_world) {
                    reach = std::max(reach, line[e2].t1);
                    e2++;
                }
                MaximalSegment seg;
                seg.id = static_cast<int>(t.segments.size());
                seg.dir = angle_class(key.j, key.k);
                seg.u = unit_dir(angle_value(seg.dir, spec.alpha));
                seg.tmin = line[s].t0;
                seg.tmax = reach;
                double off_acc = 0;
                for (size_t q = s; q < e2; q++) {
                    off_acc += seg.u.cross(t.vertices[line[q].v_lo].pos);
                    (line[q].forward ? seg.left : seg.right).push_back(line[q]);
                }
                seg.offset = off_acc / static_cast<double>(e2 - s);
                for (const auto& f : seg.left) seg.left_sum += SymLen::unit(f.label);
                for (const auto& f : seg.right) seg.right_sum += SymLen::unit(f.label);
                t.segments.push_back(seg);
                s = e2;
            }
            i = j;
        }
    }

    // Vertices lying on each segment's carrier, sorted by line parameter.
    for (auto& seg : t.segments) {
        std::vector<std::pair<double, int>> on;
        for (size_t vi = 0; vi < t.vertices.size(); vi++) {
            Vec2 p = t.vertices[vi].pos;
            if (std::abs(seg.u.cross(p) - seg.offset) > 2 * t.eps_world) continue;
            double tp = seg.u.dot(p);
            if (tp < seg.tmin - t.eps_world || tp > seg.tmax + t.eps_world) continue;
            on.push_back({tp, static_cast<int>(vi)});
        }
        std::sort(on.begin(), on.end());
        for (auto& [tp, vi] : on) {
            seg.vertex_t.push_back(tp);
            seg.vertices_on.push_back(vi);
        }
    }

    // Wedge sums, contiguity, and vertex locations.
    double ang_tol = 1e-7;
    for (size_t vi = 0; vi < t.vertices.size(); vi++) {
        VertexInfo& v = t.vertices[vi];
        AngleSpan total{0, 0};
        struct Arc {
            double s, w;
        };
        std::vector<Arc> arcs;
        for (auto [tile, corner] : v.wedges) {
            AngleSpan w = t.tiles[tile].corner_angle(corner);
            total = span_add(total, w);
            arcs.push_back({angle_value(t.tiles[tile].edges[corner].dir, spec.alpha), span_value(w, spec.alpha)});
        }
        v.wedge_span = total;
        v.wedge_sum = span_value(total, spec.alpha);

        int breaks = 0;
        if (!arcs.empty()) {
            std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.s < y.s; });
            for (size_t i = 0; i < arcs.size(); i++) {
                const Arc& cur = arcs[i];
                const Arc& nxt = arcs[(i + 1) % arcs.size()];
                double gap = nxt.s - (cur.s + cur.w);
                if (i + 1 == arcs.size()) gap += 2 * kPi;
                if (gap < -ang_tol)
                    throw TilingError(ErrKind::OverlapError, "overlapping wedges at vertex " + std::to_string(vi));
                if (gap > ang_tol) breaks++;
            }
        }
        bool contiguous = breaks <= (std::abs(v.wedge_sum - 2 * kPi) < ang_tol ? 0 : 1);

        if (t.region) {
            bool is_corner = false;
            for (auto rv : *t.region)
                if (dist(v.pos, rv) <= t.eps_world) is_corner = true;
            if (is_corner) {
                v.location = VertexLocation::Corner;
                continue;
            }
            bool on_bd = false;
            size_t rn = t.region->size();
            for (size_t i = 0; i < rn; i++)
                if (point_segment_dist(v.pos, (*t.region)[i], (*t.region)[(i + 1) % rn]) <= t.eps_world) on_bd = true;
            if (on_bd) {
                v.location = VertexLocation::Boundary;
                if (!opt.fragment_mode && (std::abs(v.wedge_sum - kPi) > ang_tol || !contiguous))
                    throw TilingError(ErrKind::CoverageError,
                                      "boundary vertex " + std::to_string(vi) + " wedges sum to " +
                                          std::to_string(v.wedge_sum) + ", want pi");
                continue;
            }
        }
        if (contiguous && std::abs(v.wedge_sum - kPi) < ang_tol)
            v.location = VertexLocation::InternalPi;
        else if (contiguous && std::abs(v.wedge_sum - 2 * kPi) < ang_tol)
            v.location = VertexLocation::Internal2Pi;
        else {
            v.location = VertexLocation::Open;
            if (!opt.fragment_mode)
                throw TilingError(ErrKind::CoverageError, "internal vertex " + std::to_string(vi) +
                                                              " wedges sum to " + std::to_string(v.wedge_sum));
        }
    }

    // Interval audit along every carrier: interior coverage must match on the
    // two sides; one-sided pieces are only legal on the region boundary.
    if (!opt.fragment_mode) {
        if (!t.region) throw TilingError(ErrKind::CoverageError, "full validation requires a region");
        size_t rn = t.region->size();
        auto on_region_boundary = [&](Vec2 p) {
            for (size_t i = 0; i < rn; i++)
                if (point_segment_dist(p, (*t.region)[i], (*t.region)[(i + 1) % rn]) <= 2 * t.eps_world) return true;
            return false;
        };
        for (auto& seg : t.segments) {
            std::vector<double> cuts;
            for (const auto& f : seg.left) {
                cuts.push_back(f.t0);
                cuts.push_back(f.t1);
            }
            for (const auto& f : seg.right) {
                cuts.push_back(f.t0);
                cuts.push_back(f.t1);
            }
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end(),
                                   [&](double x, double y) { return y - x <= t.eps_world; }),
                       cuts.end());
            bool all_boundary = true;
            for (size_t i = 0; i + 1 < cuts.size(); i++) {
                double lo = cuts[i], hi = cuts[i + 1], mid = 0.5 * (lo + hi);
                int nl = 0, nr = 0;
                for (const auto& f : seg.left)
                    if (f.t0 <= mid && mid <= f.t1) nl++;
                for (const auto& f : seg.right)
                    if (f.t0 <= mid && mid <= f.t1) nr++;
                if (nl > 1 || nr > 1)
                    throw TilingError(ErrKind::OverlapError, "stacked collinear edges on segment " +
                                                                 std::to_string(seg.id));
                if (nl + nr == 0) continue;
                if (nl == 1 && nr == 1) {
                    all_boundary = false;
                    continue;
                }
                Vec2 midpt = seg.u * mid + Vec2{-seg.u.y, seg.u.x} * seg.offset;
                if (!on_region_boundary(midpt))
                    throw TilingError(ErrKind::DanglingEdgeError,
                                      "segment " + std::to_string(seg.id) + " has a one-sided stretch at t=" +
                                          std::to_string(mid) + " away from the boundary");
            }
            seg.on_region_boundary = all_boundary && (seg.left.empty() || seg.right.empty());
        }

        // Global area identity.
        double tile_area = 0.5 * spec.a * spec.b * std::sin(2 * kPi / 3);
        double total = tile_area * static_cast<double>(t.tiles.size());
        double want = std::abs(polygon_area(*t.region));
        if (std::abs(total - want) > area_tol)
            throw TilingError(ErrKind::CoverageError, "tile area " + std::to_string(total) +
                                                          " != region area " + std::to_string(want));
        for (const auto& tile : t.tiles)
            for (auto vtx : tile.verts)
                if (!point_in_polygon(vtx, *t.region, 2 * t.eps_world))
                    throw TilingError(ErrKind::CoverageError,
                                      "tile " + std::to_string(tile.id) + " leaves the region");
    } else if (t.region) {
        size_t rn = t.region->size();
        for (auto& seg : t.segments) {
            bool one_sided = seg.left.empty() || seg.right.empty();
            if (!one_sided) continue;
            bool on_bd = true;
            for (const auto& f : seg.left.empty() ? seg.right : seg.left) {
                Vec2 plo = t.vertices[f.v_lo].pos, phi = t.vertices[f.v_hi].pos;
                bool frag_on = false;
                for (size_t i = 0; i < rn; i++) {
                    if (point_segment_dist(plo, (*t.region)[i], (*t.region)[(i + 1) % rn]) <= 2 * t.eps_world &&
                        point_segment_dist(phi, (*t.region)[i], (*t.region)[(i + 1) % rn]) <= 2 * t.eps_world)
                        frag_on = true;
                }
                if (!frag_on) on_bd = false;
            }
            seg.on_region_boundary = on_bd;
        }
    }

    return t;
}

std::vector<WalkStep> boundary_walk(const Tiling& t) {
    if (!t.region) throw TilingError(ErrKind::NonSimpleBoundary, "no region to walk");
    const auto& region = *t.region;
    size_t rn = region.size();
    std::vector<WalkStep> walk;

    for (size_t ri = 0; ri < rn; ri++) {
        Vec2 r0 = region[ri], r1 = region[(ri + 1) % rn];
        Vec2 rd = r1 - r0;
        double rlen = rd.norm();
        Vec2 ru = rd * (1.0 / rlen);
        struct Hit {
            double s;
            WalkStep step;
        };
        std::vector<Hit> hits;
        for (const auto& tile : t.tiles) {
            for (const auto& e : tile.edges) {
                Vec2 pf = t.vertices[e.v_from].pos, pt = t.vertices[e.v_to].pos;
                if (point_segment_dist(pf, r0, r1) > 2 * t.eps_world) continue;
                if (point_segment_dist(pt, r0, r1) > 2 * t.eps_world) continue;
                if (ru.dot(pt - pf) <= 0) continue;  // interior keeps left; walk runs with the region
                WalkStep ws;
                ws.tile = e.tile;
                ws.e = e.e;
                ws.v_from = e.v_from;
                ws.v_to = e.v_to;
                ws.label = e.label;
                ws.dir = e.dir;
                ws.len = SymLen::unit(e.label);
                hits.push_back({ru.dot(pf - r0), ws});
            }
        }
        std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.s < b.s; });
        if (hits.empty()) throw TilingError(ErrKind::NonSimpleBoundary, "region side " + std::to_string(ri) +
                                                                            " carries no tile edges");
        if (std::abs(hits.front().s) > 2 * t.eps_world)
            throw TilingError(ErrKind::NonSimpleBoundary, "gap at the start of region side " + std::to_string(ri));
        double reach = 0;
        for (auto& h : hits) {
            if (std::abs(h.s - reach) > 2 * t.eps_world)
                throw TilingError(ErrKind::NonSimpleBoundary,
                                  "gap or overlap on region side " + std::to_string(ri));
            Vec2 pt = t.vertices[h.step.v_to].pos;
            reach = ru.dot(pt - r0);
            walk.push_back(h.step);
        }
        if (std::abs(reach - rlen) > 2 * t.eps_world)
            throw TilingError(ErrKind::NonSimpleBoundary, "region side " + std::to_string(ri) + " not fully covered");
    }

    // Chain check, then rotate the walk to start at the lowest-then-leftmost vertex.
    size_t n = walk.size();
    for (size_t i = 0; i < n; i++)
        if (walk[i].v_to != walk[(i + 1) % n].v_from)
            throw TilingError(ErrKind::NonSimpleBoundary, "boundary walk does not chain");
    size_t best = 0;
    auto key = [&](size_t i) {
        Vec2 p = t.vertices[walk[i].v_from].pos;
        return std::make_pair(p.y, p.x);
    };
    for (size_t i = 1; i < n; i++)
        if (key(i) < key(best)) best = i;
    std::rotate(walk.begin(), walk.begin() + static_cast<long>(best), walk.end());
    return walk;
}

std::vector<Placement> placements_of(const Tiling& t) {
    std::vector<Placement> out;
    out.reserve(t.tiles.size());
    for (const auto& tile : t.tiles) out.push_back(tile.p);
    return out;
}

Tiling transform_tiling(const Tiling& t, AngleClass rot, Vec2 translation) {
    double th = angle_value(rot, t.spec.alpha);
    double cs = std::cos(th), sn = std::sin(th);
    auto xf = [&](Vec2 v) { return Vec2{cs * v.x - sn * v.y, sn * v.x + cs * v.y} + translation; };
    std::vector<Placement> ps;
    for (const auto& tile : t.tiles) {
        Placement p = tile.p;
        p.anchor = xf(p.anchor);
        p.dir = angle_add(p.dir, rot);
        ps.push_back(p);
    }
    std::optional<std::vector<Vec2>> region;
    if (t.region) {
        region.emplace();
        for (auto v : *t.region) region->push_back(xf(v));
    }
    BuildOptions opt;
    opt.fragment_mode = t.fragment_mode;
    opt.eps = t.eps;
    Tiling out = build_tiling(t.spec, ps, region, opt);
    out.region_side_len = t.region_side_len;
    return out;
}

}  // namespace tritile
