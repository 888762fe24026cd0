#include "tritile/analysis.hpp"

#include <doctest.h>

#include "tritile/generators.hpp"

using namespace tritile;

namespace {

const TileSpec kSpec = make_spec_exact(Rat(3), Rat(5));

// Bare tiling carrying hand-built segments, for exercising relation
// extraction without a full geometric build.
Tiling forged(const TileSpec& spec) {
    Tiling t;
    t.spec = spec;
    t.eps = 1e-9;
    t.eps_world = 1e-9;
    return t;
}

Fragment frag(SideLabel label, double t0, double t1) {
    Fragment f;
    f.label = label;
    f.t0 = t0;
    f.t1 = t1;
    return f;
}

MaximalSegment seam(int id, double tmin, double tmax, std::vector<Fragment> left,
                    std::vector<Fragment> right, SymLen lsum, SymLen rsum) {
    MaximalSegment s;
    s.id = id;
    s.tmin = tmin;
    s.tmax = tmax;
    s.left = std::move(left);
    s.right = std::move(right);
    s.left_sum = std::move(lsum);
    s.right_sum = std::move(rsum);
    return s;
}

SymLen A() { return SymLen::unit(SideLabel::A); }
SymLen B() { return SymLen::unit(SideLabel::B); }
SymLen C() { return SymLen::unit(SideLabel::C); }

// Three direct copies fanned around a center: gamma wedges inside, an
// equilateral all-c boundary outside. Closes up only for a = b, which makes
// alpha = pi/6: the honest angle mode is commensurable.
Tiling three_tile_equilateral() {
    TileSpec spec = make_spec_exact(Rat(1), Rat(1), AngleMode::Commensurable);
    std::vector<Placement> ps;
    for (int i = 0; i < 3; i++)
        ps.push_back({{0, 0}, angle_class(2 * i, 0), {SideLabel::B, SideLabel::C, SideLabel::A}});
    std::vector<Vec2> region;
    for (int i = 0; i < 3; i++)
        region.push_back(unit_dir(angle_value(angle_class(2 * i, 0), spec.alpha)) * spec.b);
    return build_tiling(spec, ps, region);
}

}  // namespace

TEST_CASE("census types the fan fixture's hub as a star") {
    Tiling t = gen_appendix_fixture(kSpec);
    VertexCensus cen = classify_vertices(t);
    CHECK(cen.star == 1);
    CHECK(cen.simple == 0);
    CHECK(cen.center == 0);
    CHECK(cen.double_star == 0);
    CHECK(cen.gamma_star == 0);
    CHECK(cen.double_simple == 0);
    CHECK(cen.other == 0);
    CHECK(cen.n_alpha == 7);  // one alpha wedge per tile
    CHECK(cen.n_beta == 7);
    CHECK(cen.n_gamma == 7);
}

TEST_CASE("census identity on the subdivided triangle") {
    Tiling t = gen_quadratic(2, kSpec);
    VertexCensus cen = classify_vertices(t);
    CHECK(cen.simple == 3);  // one mid-side vertex per region side
    CHECK(cen.star + cen.center + cen.double_star + cen.gamma_star + cen.double_simple == 0);
    CHECK(cen.other == 0);
    CHECK(cen.n_alpha == 4);
    CHECK(cen.n_beta == 4);
    CHECK(cen.n_gamma == 4);
    // corners similar to the tile: alpha, beta, gamma once each
    CHECK(corner_contribution(t) == 0);
    CHECK(census_identity_check(cen, corner_contribution(t)) == 0);
}

TEST_CASE("census identity on the kite") {
    Tiling t = gen_kite(kSpec);
    VertexCensus cen = classify_vertices(t);
    CHECK(cen.simple + cen.star + cen.center == 0);
    CHECK(cen.n_alpha == 2);
    // corner wedges (2 alpha) (gamma) (2 beta) (gamma) cancel exactly
    CHECK(corner_contribution(t) == 0);
    CHECK(census_identity_check(cen, 0) == 0);
}

TEST_CASE("gamma graph finds the one terminated run in the fan fixture") {
    Tiling t = gen_appendix_fixture(kSpec);
    int x = t.vertex_at({0, 0});
    int p = t.vertex_at({-kSpec.a, 0});
    REQUIRE(x >= 0);
    REQUIRE(p >= 0);

    GammaGraph ga = build_gamma_graph(t, SideLabel::A);
    REQUIRE(ga.links.size() == 1);
    CHECK(ga.links[0].tail == p);
    CHECK(ga.links[0].head == x);
    CHECK(ga.links[0].run_on_left);
    CHECK(t.segments[ga.links[0].segment].dir == AngleClass{0, 0});
    CHECK(ga.in(x) == 1);
    CHECK(ga.out(x) == 0);
    CHECK(ga.f(x) == -1);
    CHECK(ga.in(p) == 0);
    CHECK(ga.out(p) == 1);
    CHECK(ga.f(p) == 1);

    CHECK(build_gamma_graph(t, SideLabel::B).links.empty());
    CHECK(build_gamma_graph(t, SideLabel::C).links.empty());
}

TEST_CASE("gamma graphs of seam-free patches are empty") {
    for (SideLabel lbl : {SideLabel::A, SideLabel::B, SideLabel::C}) {
        CAPTURE(side_char(lbl));
        CHECK(build_gamma_graph(gen_kite(kSpec), lbl).links.empty());
        CHECK(build_gamma_graph(gen_parallelogram(kSpec), lbl).links.empty());
        CHECK(build_gamma_graph(gen_quadratic(2, kSpec), lbl).links.empty());
    }
}

TEST_CASE("extension audits pass on the simple-vertex patch") {
    Tiling t = gen_extension_patch(kSpec);
    int q = t.vertex_at({0, 0});
    REQUIRE(q >= 0);
    auto audits = audit_extension_lemmas(t);
    REQUIRE(audits.size() == 2);
    int c_rule = 0, a_rule = 0;
    for (const auto& rec : audits) {
        CHECK(rec.vertex == q);
        CHECK(rec.pass);
        REQUIRE(rec.found_carrier >= 0);
        if (rec.rule == AuditRule::CAfterPiVertex) {
            c_rule++;
            CHECK(t.segments[rec.found_carrier].dir == AngleClass{1, -1});
        } else {
            a_rule++;
            CHECK(t.segments[rec.found_carrier].dir == AngleClass{0, -1});
        }
    }
    CHECK(c_rule == 1);
    CHECK(a_rule == 1);
}

TEST_CASE("extension audits stay quiet without a hypothesis pair") {
    CHECK(audit_extension_lemmas(gen_appendix_fixture(kSpec)).empty());
    CHECK(audit_extension_lemmas(gen_quadratic(2, kSpec)).empty());
    CHECK(audit_extension_lemmas(gen_kite(kSpec)).empty());
}

TEST_CASE("relation extraction normalizes forged seams") {
    SUBCASE("three labels, isolated side unique") {
        Tiling t = forged(kSpec);
        t.segments.push_back(seam(0, 0, 14,
                                  {frag(SideLabel::C, 0, 7), frag(SideLabel::C, 7, 14)},
                                  {frag(SideLabel::A, 0, 3), frag(SideLabel::A, 3, 6),
                                   frag(SideLabel::A, 6, 9), frag(SideLabel::B, 9, 14)},
                                  rat(2) * C(), rat(3) * A() + B()));
        auto rels = extract_relations(t);
        REQUIRE(rels.size() == 1);
        CHECK(rels[0].kind == RelationKind::C);
        CHECK(rels[0].j == 2);
        CHECK(rels[0].p == 3);
        CHECK(rels[0].q == 1);
        CHECK(rels[0].witness == 0);
        CHECK(to_string(rels[0]) == "2c = 3a + b");
    }
    SUBCASE("two labels isolate the smaller one") {
        Tiling t = forged(kSpec);
        t.segments.push_back(seam(0, 0, 6, {frag(SideLabel::A, 0, 3), frag(SideLabel::A, 3, 6)},
                                  {frag(SideLabel::B, 0, 6)}, rat(2) * A(), B()));
        auto rels = extract_relations(t);
        REQUIRE(rels.size() == 1);
        CHECK(rels[0].kind == RelationKind::A);
        CHECK(rels[0].j == 2);
        CHECK(rels[0].p == 1);
        CHECK(rels[0].q == 0);
        CHECK(to_string(rels[0]) == "2a = b");
    }
    SUBCASE("coefficients are reduced by their gcd") {
        Tiling t = forged(kSpec);
        t.segments.push_back(seam(0, 0, 12,
                                  {frag(SideLabel::A, 0, 3), frag(SideLabel::A, 3, 6),
                                   frag(SideLabel::A, 6, 9), frag(SideLabel::A, 9, 12)},
                                  {frag(SideLabel::B, 0, 6), frag(SideLabel::B, 6, 12)},
                                  rat(4) * A(), rat(2) * B()));
        auto rels = extract_relations(t);
        REQUIRE(rels.size() == 1);
        CHECK(rels[0] == Relation{RelationKind::A, 2, 1, 0});
    }
    SUBCASE("duplicate relations keep the first witness") {
        Tiling t = forged(kSpec);
        for (int id : {0, 1})
            t.segments.push_back(seam(id, 0, 6,
                                      {frag(SideLabel::A, 0, 3), frag(SideLabel::A, 3, 6)},
                                      {frag(SideLabel::B, 0, 6)}, rat(2) * A(), B()));
        auto rels = extract_relations(t);
        REQUIRE(rels.size() == 1);
        CHECK(rels[0].witness == 0);
    }
    SUBCASE("a coverage hole suppresses the seam") {
        Tiling t = forged(kSpec);
        t.segments.push_back(seam(0, 0, 7, {frag(SideLabel::C, 0, 7)},
                                  {frag(SideLabel::A, 0, 3)}, C(), A()));
        CHECK(extract_relations(t).empty());
    }
    SUBCASE("region boundary segments are ignored") {
        Tiling t = forged(kSpec);
        auto s = seam(0, 0, 6, {frag(SideLabel::A, 0, 3), frag(SideLabel::A, 3, 6)},
                      {frag(SideLabel::B, 0, 6)}, rat(2) * A(), B());
        s.on_region_boundary = true;
        t.segments.push_back(s);
        CHECK(extract_relations(t).empty());
    }
    SUBCASE("a one-signed difference is geometrically impossible") {
        Tiling t = forged(kSpec);
        t.segments.push_back(
            seam(0, 0, 7, {frag(SideLabel::C, 0, 7)}, {frag(SideLabel::C, 0, 7)}, C() + A(), C()));
        try {
            extract_relations(t);
            FAIL("expected InconsistentRelations");
        } catch (const TilingError& e) {
            CHECK(e.kind == ErrKind::InconsistentRelations);
        }
    }
}

TEST_CASE("generated patches carry no relations") {
    CHECK(extract_relations(gen_quadratic(2, kSpec)).empty());
    CHECK(extract_relations(gen_kite(kSpec)).empty());
    CHECK(extract_relations(gen_parallelogram(kSpec)).empty());
}

TEST_CASE("ratio deduction from relation sets") {
    SUBCASE("no relations, no ratios") {
        DeducedRatios r = deduce_ratios({});
        CHECK(!r.a_over_b);
        CHECK(!r.c_over_b);
    }
    SUBCASE("independent pair pins both ratios") {
        Relation ra{RelationKind::A, 2, 1, 1};  // 2a = b + c
        Relation rb{RelationKind::B, 3, 1, 2};  // 3b = a + 2c
        DeducedRatios r = deduce_ratios({ra, rb});
        REQUIRE(r.a_over_b);
        REQUIRE(r.c_over_b);
        CHECK(*r.a_over_b == 1);
        CHECK(*r.c_over_b == 1);
        auto closed = stubborn_ratio(ra, rb);
        REQUIRE(closed);
        CHECK(*closed == *r.a_over_b);
    }
    SUBCASE("c and b relations recover an integer-sided triple") {
        DeducedRatios r = deduce_ratios(
            {{RelationKind::C, 2, 3, 1}, {RelationKind::B, 3, 5, 0}});  // 2c = 3a+b, 3b = 5a
        REQUIRE(r.a_over_b);
        REQUIRE(r.c_over_b);
        CHECK(*r.a_over_b == rat(3, 5));
        CHECK(*r.c_over_b == rat(7, 5));
    }
    SUBCASE("single a-b relation pins one ratio") {
        DeducedRatios r = deduce_ratios({{RelationKind::A, 1, 1, 0}});  // a = b
        REQUIRE(r.a_over_b);
        CHECK(*r.a_over_b == 1);
        CHECK(!r.c_over_b);
    }
    SUBCASE("single a-c relation pins neither requested ratio") {
        DeducedRatios r = deduce_ratios({{RelationKind::C, 1, 2, 0}});  // c = 2a
        CHECK(!r.a_over_b);
        CHECK(!r.c_over_b);
    }
    SUBCASE("contradictory pair forces a zero side") {
        std::vector<Relation> rels{{RelationKind::A, 1, 2, 0},
                                   {RelationKind::A, 2, 1, 0}};  // a = 2b and 2a = b
        CHECK_THROWS_AS(deduce_ratios(rels), TilingError);
    }
    SUBCASE("full-rank systems are inconsistent") {
        std::vector<Relation> rels{{RelationKind::A, 2, 1, 1},
                                   {RelationKind::B, 3, 1, 2},
                                   {RelationKind::C, 1, 1, 1}};
        CHECK_THROWS_AS(deduce_ratios(rels), TilingError);
    }
    SUBCASE("sign-mixed kernels are inconsistent") {
        std::vector<Relation> rels{{RelationKind::A, 1, 0, 1},
                                   {RelationKind::C, 1, 2, 1}};  // a = c and c = 2a + b
        CHECK_THROWS_AS(deduce_ratios(rels), TilingError);
    }
    SUBCASE("closed form needs an a and a b relation") {
        CHECK(!stubborn_ratio({RelationKind::C, 2, 3, 1}, {RelationKind::B, 3, 5, 0}));
        // degenerate denominator: a = b and b = a
        CHECK(!stubborn_ratio({RelationKind::A, 1, 1, 0}, {RelationKind::B, 1, 1, 0}));
    }
}

TEST_CASE("verdict gates") {
    Verdict v = commensurability_verdict(gen_appendix_fixture(kSpec));
    CHECK(!v.applicable);
    CHECK(v.gate_reason == "needs a fully tiled region");

    v = commensurability_verdict(gen_kite(kSpec));
    CHECK(!v.applicable);
    CHECK(v.gate_reason == "region is not a triangle");

    v = commensurability_verdict(gen_quadratic(2, kSpec));
    CHECK(!v.applicable);
    CHECK(v.gate_reason == "angle mode is not incommensurable");

    TileSpec marked = make_spec_exact(Rat(3), Rat(5), AngleMode::Incommensurable);
    v = commensurability_verdict(gen_quadratic(2, marked));
    CHECK(!v.applicable);
    CHECK(v.gate_reason == "region is similar to the tile");

    // the exceptional equilateral tiling itself has commensurable angles, so
    // the honest verdict stops at the angle gate
    v = commensurability_verdict(three_tile_equilateral());
    CHECK(!v.applicable);
    CHECK(v.gate_reason == "angle mode is not incommensurable");
}

TEST_CASE("pipeline stages on the three-tile equilateral") {
    Tiling t = three_tile_equilateral();
    REQUIRE(t.tiles.size() == 3);

    VertexCensus cen = classify_vertices(t);
    CHECK(cen.center == 1);
    CHECK(cen.simple + cen.star + cen.double_star + cen.gamma_star + cen.double_simple == 0);
    CHECK(cen.other == 0);
    CHECK(cen.n_alpha == 3);
    long corner = corner_contribution(t);
    CHECK(corner == 6);  // three {alpha, beta} corners
    CHECK(census_identity_check(cen, corner) == 0);

    auto rels = extract_relations(t);
    REQUIRE(rels.size() == 1);
    CHECK(rels[0] == Relation{RelationKind::A, 1, 1, 0});
    CHECK(to_string(rels[0]) == "a = b");
    DeducedRatios ratios = deduce_ratios(rels);
    REQUIRE(ratios.a_over_b);
    CHECK(*ratios.a_over_b == 1);
    CHECK(!ratios.c_over_b);

    auto walk = boundary_walk(t);
    REQUIRE(walk.size() == 3);
    for (const auto& step : walk) CHECK(step.label == SideLabel::C);

    CHECK(audit_extension_lemmas(t).empty());
    for (SideLabel lbl : {SideLabel::A, SideLabel::B, SideLabel::C})
        CHECK(build_gamma_graph(t, lbl).links.empty());
}
