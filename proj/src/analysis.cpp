#include "tritile/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace tritile {

namespace {

constexpr double kAngTol = 1e-7;

double norm_angle(double x) {
    x = std::fmod(x, 2 * kPi);
    return x < 0 ? x + 2 * kPi : x;
}

// Which open half-planes of the carrier the wedge (tile, corner) pokes into.
// The wedge opens counterclockwise from its outgoing edge; widths are at most
// 2pi/3, so the arc wraps past 2pi at most once.
struct SideTouch {
    bool left = false, right = false;
};

SideTouch wedge_sides(const Tiling& t, int tile, int corner, AngleClass carrier_dir) {
    AngleClass rel = angle_sub(t.tiles[tile].edges[corner].dir, carrier_dir);
    double th0 = norm_angle(angle_value(rel, t.spec.alpha));
    double th1 = th0 + span_value(t.tiles[tile].corner_angle(corner), t.spec.alpha);
    SideTouch s;
    s.left = th0 < kPi - kAngTol || th1 > 2 * kPi + kAngTol;
    s.right = th1 > kPi + kAngTol && th0 < 2 * kPi - kAngTol;
    return s;
}

bool vertex_touches_side(const Tiling& t, int v, AngleClass carrier_dir, bool left) {
    for (auto [tile, corner] : t.vertices[v].wedges) {
        SideTouch s = wedge_sides(t, tile, corner, carrier_dir);
        if (left ? s.left : s.right) return true;
    }
    return false;
}

// A segment is terminated at a vertex when tiles touch it from both sides of
// the carrier there.
bool terminated_at(const Tiling& t, int v, AngleClass carrier_dir) {
    return vertex_touches_side(t, v, carrier_dir, true) &&
           vertex_touches_side(t, v, carrier_dir, false);
}

std::array<int, 3> wedge_counts(const Tiling& t, const VertexInfo& v) {
    std::array<int, 3> m{0, 0, 0};  // alpha, beta, gamma
    for (auto [tile, corner] : v.wedges) {
        AngleSpan s = t.tiles[tile].corner_angle(corner);
        if (s == span_alpha())
            m[0]++;
        else if (s == span_beta())
            m[1]++;
        else
            m[2]++;
    }
    return m;
}

// Elementary-interval view of one carrier: cut points from all fragment
// endpoints, and per-interval coverage flags for each side.
struct CarrierCover {
    std::vector<double> cuts;
    std::vector<bool> left, right;

    bool two_sided_over(double lo, double hi, double tol) const {
        for (size_t i = 0; i + 1 < cuts.size(); i++) {
            if (cuts[i + 1] <= lo + tol || cuts[i] >= hi - tol) continue;
            if (!left[i] || !right[i]) return false;
        }
        return true;
    }
};

CarrierCover cover_of(const MaximalSegment& s, double tol) {
    CarrierCover c;
    c.cuts.push_back(s.tmin);
    c.cuts.push_back(s.tmax);
    for (const auto* side : {&s.left, &s.right})
        for (const auto& f : *side) {
            c.cuts.push_back(f.t0);
            c.cuts.push_back(f.t1);
        }
    std::sort(c.cuts.begin(), c.cuts.end());
    c.cuts.erase(std::unique(c.cuts.begin(), c.cuts.end(),
                             [&](double x, double y) { return y - x <= tol; }),
                 c.cuts.end());
    auto covered = [&](const std::vector<Fragment>& fr, double mid) {
        for (const auto& f : fr)
            if (f.t0 <= mid && mid <= f.t1) return true;
        return false;
    };
    for (size_t i = 0; i + 1 < c.cuts.size(); i++) {
        double mid = 0.5 * (c.cuts[i] + c.cuts[i + 1]);
        c.left.push_back(covered(s.left, mid));
        c.right.push_back(covered(s.right, mid));
    }
    return c;
}

}  // namespace

VertexCensus classify_vertices(const Tiling& t) {
    VertexCensus cen;
    for (const auto& v : t.vertices) {
        auto [ma, mb, mg] = wedge_counts(t, v);
        cen.n_alpha += ma;
        cen.n_beta += mb;
        cen.n_gamma += mg;
        if (v.location == VertexLocation::Corner || v.location == VertexLocation::Open) continue;
        if (ma == 1 && mb == 1 && mg == 1)
            cen.simple++;
        else if (ma == 3 && mb == 3 && mg == 0)
            cen.star++;
        else if (ma == 0 && mb == 0 && mg == 3)
            cen.center++;
        else if (ma == 6 && mb == 6 && mg == 0)
            cen.double_star++;
        else if (ma == 4 && mb == 4 && mg == 1)
            cen.gamma_star++;
        else if (ma == 2 && mb == 2 && mg == 2)
            cen.double_simple++;
        else if (t.spec.angle_mode == AngleMode::Incommensurable) {
            std::ostringstream os;
            os << "vertex at (" << v.pos.x << ", " << v.pos.y << ") carries " << ma
               << " alpha, " << mb << " beta, " << mg << " gamma wedges, matching no type";
            throw TilingError(ErrKind::ClassificationError, os.str());
        } else
            cen.other++;
    }
    return cen;
}

long corner_contribution(const Tiling& t) {
    long total = 0;
    for (const auto& v : t.vertices) {
        if (v.location != VertexLocation::Corner) continue;
        auto [ma, mb, mg] = wedge_counts(t, v);
        total += ma + mb - 2 * mg;
    }
    return total;
}

long census_identity_check(const VertexCensus& cen, long corner_contrib) {
    // per-vertex value of #alpha + #beta - 2#gamma; simple and double_simple
    // vanish; untyped "other" vertices are not represented here.
    return 6 * cen.S() + 12 * cen.S2() - 6 * cen.C() + corner_contrib;
}

int GammaGraph::in(int v) const {
    auto it = in_degree.find(v);
    return it == in_degree.end() ? 0 : it->second;
}

int GammaGraph::out(int v) const {
    auto it = out_degree.find(v);
    return it == out_degree.end() ? 0 : it->second;
}

GammaGraph build_gamma_graph(const Tiling& t, SideLabel label) {
    GammaGraph g;
    g.label = label;
    const double tol = t.eps_world;

    for (const auto& s : t.segments) {
        if (s.on_region_boundary) continue;
        CarrierCover cover = cover_of(s, tol);

        for (int k = 0; k < 2; k++) {
            const auto& frags = k == 0 ? s.left : s.right;  // sorted by t0
            int n = static_cast<int>(frags.size());
            for (int d : {+1, -1}) {
                // walk maximal runs of abutting label-edges in direction d
                int i = d > 0 ? 0 : n - 1;
                while (i >= 0 && i < n) {
                    if (frags[i].label != label) {
                        i += d;
                        continue;
                    }
                    int first = i, last = i;
                    auto abuts = [&](int u, int v2) {  // v2 follows u in direction d
                        return d > 0 ? frags[v2].t0 - frags[u].t1 <= tol
                                     : frags[u].t0 - frags[v2].t1 <= tol;
                    };
                    while (last + d >= 0 && last + d < n && abuts(last, last + d) &&
                           frags[last + d].label == label)
                        last += d;
                    i = last + d;

                    // the run must continue with an abutting non-label edge
                    int after = last + d;
                    if (after < 0 || after >= n || !abuts(last, after)) continue;

                    double head_t = d > 0 ? frags[last].t1 : frags[last].t0;
                    int head_v = d > 0 ? frags[last].v_hi : frags[last].v_lo;
                    if (head_v < 0) continue;
                    // no tile on the far side may have a vertex at the head
                    if (vertex_touches_side(t, head_v, s.dir, k == 1)) continue;

                    // endpoints of run fragments are the legal tail positions
                    std::set<int> run_pts;
                    for (int r = std::min(first, last); r <= std::max(first, last); r++) {
                        run_pts.insert(frags[r].v_lo);
                        run_pts.insert(frags[r].v_hi);
                    }
                    int tail_v = -1;
                    int vcount = static_cast<int>(s.vertices_on.size());
                    // earliest qualifying vertex in direction d gives the
                    // longest segment
                    for (int vi = d > 0 ? 0 : vcount - 1; vi >= 0 && vi < vcount; vi += d) {
                        double tv = s.vertex_t[vi];
                        if (d > 0 ? tv >= head_t - tol : tv <= head_t + tol) break;
                        int v = s.vertices_on[vi];
                        if (!run_pts.count(v)) continue;
                        if (!terminated_at(t, v, s.dir)) continue;
                        double lo = std::min(tv, head_t), hi = std::max(tv, head_t);
                        if (!cover.two_sided_over(lo, hi, tol)) continue;
                        tail_v = v;
                        break;
                    }
                    if (tail_v < 0) continue;
                    g.links.push_back({tail_v, head_v, s.id, k == 0});
                }
            }
        }
    }
    for (const auto& l : g.links) {
        g.out_degree[l.tail]++;
        g.in_degree[l.head]++;
    }
    return g;
}

namespace {

// Fragments of one carrier with an endpoint at parameter tv, split by the
// direction in which they leave the vertex. side: 0 left, 1 right.
struct IncidentFrag {
    SideLabel label;
    int side;
    int dir;  // +1 heads up the carrier, -1 down
};

std::vector<IncidentFrag> incident_fragments(const MaximalSegment& s, double tv, double tol) {
    std::vector<IncidentFrag> out;
    for (int k = 0; k < 2; k++)
        for (const auto& f : (k == 0 ? s.left : s.right)) {
            if (std::abs(f.t0 - tv) <= tol) out.push_back({f.label, k, +1});
            if (std::abs(f.t1 - tv) <= tol) out.push_back({f.label, k, -1});
        }
    return out;
}

// An x/y pair emanates from the vertex when two fragments on opposite sides
// of some carrier both leave it in the same direction carrying those labels,
// on a stretch interior to the tiling.
bool pair_emanates(const Tiling& t, const std::vector<std::pair<int, double>>& carriers, int v,
                   SideLabel x, int* found) {
    for (auto [sid, tv] : carriers) {
        const auto& s = t.segments[sid];
        if (s.on_region_boundary) continue;
        auto inc = incident_fragments(s, tv, t.eps_world);
        for (int d : {+1, -1}) {
            bool x_left = false, x_right = false, other_left = false, other_right = false;
            for (const auto& f : inc) {
                if (f.dir != d) continue;
                if (f.label == x)
                    (f.side == 0 ? x_left : x_right) = true;
                else
                    (f.side == 0 ? other_left : other_right) = true;
            }
            if ((x_left && other_right) || (x_right && other_left)) {
                if (!terminated_at(t, v, s.dir)) continue;
                if (found) *found = sid;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

std::vector<ExtensionAudit> audit_extension_lemmas(const Tiling& t) {
    std::vector<ExtensionAudit> out;
    // carriers through each vertex, with the vertex's line parameter
    std::vector<std::vector<std::pair<int, double>>> at(t.vertices.size());
    for (const auto& s : t.segments)
        for (size_t i = 0; i < s.vertices_on.size(); i++)
            at[s.vertices_on[i]].push_back({s.id, s.vertex_t[i]});

    for (size_t v = 0; v < t.vertices.size(); v++) {
        const auto& info = t.vertices[v];
        bool pi_vertex =
            info.location == VertexLocation::InternalPi || info.location == VertexLocation::Boundary;
        if (!pi_vertex) continue;
        auto [ma, mb, mg] = wedge_counts(t, info);
        bool simple = ma == 1 && mb == 1 && mg == 1;

        for (auto [sid, tv] : at[v]) {
            const auto& s = t.segments[sid];
            auto inc = incident_fragments(s, tv, t.eps_world);
            auto present = [&](int d, auto pred) {
                for (const auto& f : inc)
                    if (f.dir == d && pred(f.label)) return true;
                return false;
            };
            auto record = [&](AuditRule rule, SideLabel x) {
                int found = -1;
                bool ok = pair_emanates(t, at[v], static_cast<int>(v), x, &found);
                out.push_back({rule, static_cast<int>(v), sid, ok, found});
            };
            // a c edge ends here and the carrier continues with a non-c edge
            for (int d : {+1, -1}) {
                bool c_in = present(d, [](SideLabel l) { return l == SideLabel::C; });
                bool non_c_out = present(-d, [](SideLabel l) { return l != SideLabel::C; });
                if (c_in && non_c_out) {
                    record(AuditRule::CAfterPiVertex, SideLabel::C);
                    break;
                }
            }
            if (!simple) continue;
            for (int d : {+1, -1}) {
                bool a_in = present(d, [](SideLabel l) { return l == SideLabel::A; });
                bool non_a_out = present(-d, [](SideLabel l) { return l != SideLabel::A; });
                if (a_in && non_a_out) {
                    record(AuditRule::AAfterSimpleVertex, SideLabel::A);
                    break;
                }
            }
        }
    }
    return out;
}

namespace {

std::array<long, 3> integer_coeffs(const SymLen& d) {
    mpz_class l = 1;
    for (const auto& q : d.q) l = lcm(l, q.get_den());
    std::array<long, 3> c{};
    for (int i = 0; i < 3; i++) {
        Rat scaled = d.q[i] * Rat(l);
        c[i] = scaled.get_num().get_si();
    }
    return c;
}

}  // namespace

std::string to_string(const Relation& r) {
    static const char* names[3] = {"a", "b", "c"};
    int iso = static_cast<int>(r.kind);
    int u = iso == 0 ? 1 : 0;
    int v = iso == 2 ? 1 : 2;
    std::ostringstream os;
    auto term = [&](long coef, int lbl) -> std::string {
        if (coef == 0) return "";
        std::ostringstream t2;
        if (coef != 1) t2 << coef;
        t2 << names[lbl];
        return t2.str();
    };
    os << term(r.j, iso) << " = ";
    std::string pu = term(r.p, u), qv = term(r.q, v);
    if (pu.empty() && qv.empty())
        os << "0";
    else if (pu.empty())
        os << qv;
    else if (qv.empty())
        os << pu;
    else
        os << pu << " + " << qv;
    return os.str();
}

std::vector<Relation> extract_relations(const Tiling& t) {
    std::vector<Relation> rels;
    for (const auto& s : t.segments) {
        if (s.on_region_boundary || s.left.empty() || s.right.empty()) continue;
        // both sides must cover the carrier completely for the sums to be
        // comparable; fragment patches may leave holes
        double span = s.tmax - s.tmin;
        double tol = t.eps_world * static_cast<double>(s.left.size() + s.right.size() + 2);
        double len_l = 0, len_r = 0;
        for (const auto& f : s.left) len_l += f.t1 - f.t0;
        for (const auto& f : s.right) len_r += f.t1 - f.t0;
        if (std::abs(len_l - span) > tol || std::abs(len_r - span) > tol) continue;

        SymLen diff = s.left_sum - s.right_sum;
        if (diff == SymLen::zero()) continue;
        auto c = integer_coeffs(diff);
        std::vector<int> pos, neg;
        for (int i = 0; i < 3; i++) {
            if (c[i] > 0) pos.push_back(i);
            if (c[i] < 0) neg.push_back(i);
        }
        if (pos.empty() || neg.empty())
            throw TilingError(ErrKind::InconsistentRelations,
                              "segment " + std::to_string(s.id) +
                                  " sums differ by a one-signed combination");
        int iso = pos.size() == 1 && neg.size() == 1 ? std::min(pos[0], neg[0])
                  : pos.size() == 1                  ? pos[0]
                                                     : neg[0];
        if (c[iso] < 0)
            for (auto& x : c) x = -x;
        int u = iso == 0 ? 1 : 0;
        int v = iso == 2 ? 1 : 2;
        Relation r;
        r.kind = static_cast<RelationKind>(iso);
        r.j = c[iso];
        r.p = -c[u];
        r.q = -c[v];
        r.witness = s.id;
        long g = std::gcd(r.j, std::gcd(r.p, r.q));
        r.j /= g;
        r.p /= g;
        r.q /= g;
        rels.push_back(r);
    }
    std::sort(rels.begin(), rels.end(), [](const Relation& x, const Relation& y) {
        return std::tie(x.kind, x.j, x.p, x.q, x.witness) <
               std::tie(y.kind, y.j, y.p, y.q, y.witness);
    });
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    return rels;
}

namespace {

std::array<Rat, 3> relation_row(const Relation& r) {
    int iso = static_cast<int>(r.kind);
    int u = iso == 0 ? 1 : 0;
    int v = iso == 2 ? 1 : 2;
    std::array<Rat, 3> row{Rat(0), Rat(0), Rat(0)};
    row[iso] = Rat(r.j);
    row[u] = Rat(-r.p);
    row[v] = Rat(-r.q);
    return row;
}

}  // namespace

DeducedRatios deduce_ratios(const std::vector<Relation>& rels) {
    std::vector<std::array<Rat, 3>> rows;
    for (const auto& r : rels) rows.push_back(relation_row(r));

    // Gaussian elimination to row echelon form over the rationals
    std::vector<std::array<Rat, 3>> basis;
    for (auto row : rows) {
        for (const auto& b : basis) {
            int lead = 0;
            while (lead < 3 && b[lead] == 0) lead++;
            if (lead < 3 && row[lead] != 0) {
                Rat f = row[lead] / b[lead];
                for (int i = 0; i < 3; i++) row[i] -= f * b[i];
            }
        }
        if (row[0] != 0 || row[1] != 0 || row[2] != 0) {
            basis.push_back(row);
            std::sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) {
                auto lead = [](const auto& r2) {
                    int i = 0;
                    while (i < 3 && r2[i] == 0) i++;
                    return i;
                };
                return lead(x) < lead(y);
            });
        }
    }

    auto bad = [](const std::string& why) {
        return TilingError(ErrKind::InconsistentRelations, why);
    };
    DeducedRatios out;
    if (basis.size() >= 3) throw bad("relations force all sides to zero");
    for (const auto& r : basis) {
        int nz = (r[0] != 0) + (r[1] != 0) + (r[2] != 0);
        if (nz == 1) throw bad("a side length is forced to zero");
    }
    if (basis.size() == 2) {
        const auto& r1 = basis[0];
        const auto& r2 = basis[1];
        std::array<Rat, 3> v{r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2],
                             r1[0] * r2[1] - r1[1] * r2[0]};
        if (v[1] == 0) throw bad("side b is forced to zero");
        if (v[1] < 0)
            for (auto& x : v) x = -x;
        if (v[0] <= 0 || v[2] <= 0) throw bad("sides cannot all be positive");
        out.a_over_b = v[0] / v[1];
        out.c_over_b = v[2] / v[1];
        return out;
    }
    if (basis.size() == 1) {
        const auto& r = basis[0];
        if (r[2] == 0) {
            Rat ratio = -r[1] / r[0];
            if (ratio <= 0) throw bad("a/b forced non-positive");
            out.a_over_b = ratio;
        } else if (r[0] == 0) {
            Rat ratio = -r[1] / r[2];
            if (ratio <= 0) throw bad("c/b forced non-positive");
            out.c_over_b = ratio;
        }
        // a/c alone pins neither requested ratio
    }
    return out;
}

std::optional<Rat> stubborn_ratio(const Relation& a_rel, const Relation& b_rel) {
    if (a_rel.kind != RelationKind::A || b_rel.kind != RelationKind::B) return std::nullopt;
    Rat num = Rat(b_rel.j) * a_rel.q + Rat(a_rel.p) * b_rel.q;
    Rat den = Rat(a_rel.j) * b_rel.q + Rat(a_rel.q) * b_rel.p;
    if (den == 0) return std::nullopt;
    return num / den;
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::CommensurableSidesForced: return "commensurable_sides_forced";
        case Conclusion::ExceptionalCaseEquilateral: return "exceptional_case_equilateral";
        case Conclusion::ExceptionalCase2a2bPi3: return "exceptional_case_2a_2b_pi3";
        case Conclusion::InconsistentTiling: return "inconsistent_tiling";
        case Conclusion::Undetermined: return "undetermined";
    }
    return "undetermined";
}

namespace {

std::array<double, 3> triangle_angles(const std::vector<Vec2>& tri) {
    std::array<double, 3> a{};
    for (int i = 0; i < 3; i++) {
        Vec2 u = tri[(i + 1) % 3] - tri[i];
        Vec2 w = tri[(i + 2) % 3] - tri[i];
        a[i] = std::atan2(std::abs(u.cross(w)), u.dot(w));
    }
    return a;
}

bool same_multiset(std::array<double, 3> x, std::array<double, 3> y) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (int i = 0; i < 3; i++)
        if (std::abs(x[i] - y[i]) > kAngTol) return false;
    return true;
}

}  // namespace

Verdict commensurability_verdict(const Tiling& t) {
    Verdict v;
    if (!t.region || t.fragment_mode) {
        v.gate_reason = "needs a fully tiled region";
        return v;
    }
    if (t.region->size() != 3) {
        v.gate_reason = "region is not a triangle";
        return v;
    }
    if (t.spec.angle_mode != AngleMode::Incommensurable) {
        v.gate_reason = "angle mode is not incommensurable";
        return v;
    }
    auto reg_ang = triangle_angles(*t.region);
    std::array<double, 3> tile_ang{t.spec.alpha, t.spec.beta(), 2 * kPi / 3};
    if (same_multiset(reg_ang, tile_ang)) {
        v.gate_reason = "region is similar to the tile";
        return v;
    }
    v.applicable = true;

    v.census = classify_vertices(t);
    v.corner_contrib = corner_contribution(t);
    v.census_residual = census_identity_check(v.census, v.corner_contrib);
    long n = static_cast<long>(t.tiles.size());
    bool inconsistent = v.census.n_alpha != n || v.census.n_beta != n || v.census.n_gamma != n ||
                        v.census_residual != 0 || v.census.other != 0;

    v.relations = extract_relations(t);
    try {
        v.ratios = deduce_ratios(v.relations);
    } catch (const TilingError& e) {
        if (e.kind != ErrKind::InconsistentRelations) throw;
        inconsistent = true;
    }

    auto walk = boundary_walk(t);
    const auto& reg = *t.region;
    v.side_c_counts.assign(3, 0);
    v.all_c_boundary = true;
    for (const auto& step : walk) {
        if (step.label != SideLabel::C) v.all_c_boundary = false;
        Vec2 pf = t.vertices[step.v_from].pos, pt = t.vertices[step.v_to].pos;
        for (int i = 0; i < 3; i++)
            if (point_segment_dist(pf, reg[i], reg[(i + 1) % 3]) <= 2 * t.eps_world &&
                point_segment_dist(pt, reg[i], reg[(i + 1) % 3]) <= 2 * t.eps_world) {
                if (step.label == SideLabel::C) v.side_c_counts[i]++;
                break;
            }
    }

    std::array<double, 3> eq{kPi / 3, kPi / 3, kPi / 3};
    std::array<double, 3> split{2 * t.spec.alpha, 2 * t.spec.beta(), kPi / 3};
    v.corners_equilateral = same_multiset(reg_ang, eq);
    v.corners_2a_2b_pi3 = same_multiset(reg_ang, split);

    v.audits = audit_extension_lemmas(t);

    if (inconsistent)
        v.conclusion = Conclusion::InconsistentTiling;
    else if (v.ratios.a_over_b && v.ratios.c_over_b)
        v.conclusion = Conclusion::CommensurableSidesForced;
    else if (v.all_c_boundary && v.corners_equilateral)
        v.conclusion = Conclusion::ExceptionalCaseEquilateral;
    else if (v.all_c_boundary && v.corners_2a_2b_pi3)
        v.conclusion = Conclusion::ExceptionalCase2a2bPi3;
    else
        v.conclusion = Conclusion::Undetermined;
    return v;
}

}  // namespace tritile
