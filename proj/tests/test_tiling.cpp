#include "tritile/tiling.hpp"

#include <doctest.h>

#include <cmath>

using namespace tritile;

namespace {

TileSpec spec357() { return make_spec_exact(Rat(3), Rat(5)); }

}  // namespace

TEST_CASE("single direct tile derives the expected geometry") {
    TileSpec spec = spec357();
    Placement p{{0, 0}, angle_class(0, 0), {SideLabel::A, SideLabel::B, SideLabel::C}};
    CHECK(!placement_mirrored(p.labels));

    BuildOptions opt;
    opt.fragment_mode = true;
    Tiling t = build_tiling(spec, {p}, std::nullopt, opt);
    REQUIRE(t.tiles.size() == 1);
    const PlacedTile& tile = t.tiles[0];

    CHECK(tile.verts[0].x == doctest::Approx(0.0));
    CHECK(tile.verts[1].x == doctest::Approx(3.0));
    CHECK(tile.verts[1].y == doctest::Approx(0.0));
    CHECK(tile.verts[2].x == doctest::Approx(5.5));
    CHECK(tile.verts[2].y == doctest::Approx(2.5 * std::sqrt(3.0)));

    // interior angles sit opposite their labels
    CHECK(tile.corner_angle(0) == span_beta());   // between a and c edges
    CHECK(tile.corner_angle(1) == span_gamma());  // between a and b edges
    CHECK(tile.corner_angle(2) == span_alpha());  // between b and c edges

    CHECK(tile.edges[0].dir == angle_class(0, 0));
    CHECK(tile.edges[1].dir == angle_class(1, 0));
    CHECK(tile.edges[2].dir == angle_class(4, -1));
    CHECK(tile.c_edge_dir() == angle_class(4, -1));

    // numeric directions agree with the classes
    double want = angle_value(angle_class(4, -1), spec.alpha);
    Vec2 d = tile.verts[0] - tile.verts[2];
    CHECK(std::atan2(d.y, d.x) + (std::atan2(d.y, d.x) < 0 ? 2 * kPi : 0) == doctest::Approx(want));

    CHECK(t.segments.size() == 3);
    CHECK(t.vertices.size() == 3);
    for (const auto& v : t.vertices) CHECK(v.location == VertexLocation::Open);
}

TEST_CASE("mirrored tile flips the angle order") {
    TileSpec spec = spec357();
    Placement p{{0, 0}, angle_class(0, 0), {SideLabel::B, SideLabel::A, SideLabel::C}};
    CHECK(placement_mirrored(p.labels));

    BuildOptions opt;
    opt.fragment_mode = true;
    Tiling t = build_tiling(spec, {p}, std::nullopt, opt);
    const PlacedTile& tile = t.tiles[0];
    CHECK(tile.verts[1].x == doctest::Approx(5.0));  // first edge has length b
    CHECK(tile.corner_angle(0) == span_alpha());
    CHECK(tile.corner_angle(1) == span_gamma());
    CHECK(tile.corner_angle(2) == span_beta());
    // mirrored copy: its vertices wind counterclockwise all the same
    double area = (tile.verts[1] - tile.verts[0]).cross(tile.verts[2] - tile.verts[0]);
    CHECK(area > 0);
}

TEST_CASE("two tiles sharing an edge merge into one carrier segment") {
    TileSpec spec = spec357();
    Placement up{{0, 0}, angle_class(0, 0), {SideLabel::A, SideLabel::B, SideLabel::C}};
    Placement down{{3, 0}, angle_class(3, 0), {SideLabel::A, SideLabel::B, SideLabel::C}};

    BuildOptions opt;
    opt.fragment_mode = true;
    Tiling t = build_tiling(spec, {up, down}, std::nullopt, opt);
    CHECK(t.vertices.size() == 4);

    int shared = 0;
    for (const auto& seg : t.segments) {
        if (!seg.left.empty() && !seg.right.empty()) {
            shared++;
            CHECK(seg.left_sum == SymLen::unit(SideLabel::A));
            CHECK(seg.right_sum == SymLen::unit(SideLabel::A));
            CHECK(seg.vertices_on.size() == 2);
        }
    }
    CHECK(shared == 1);
    CHECK(t.segments.size() == 5);

    // opposite c-edge classes, so the pair's invariant contributions cancel
    CHECK(zh_sign(t.tiles[0].c_edge_dir()) == -zh_sign(t.tiles[1].c_edge_dir()));
}

TEST_CASE("overlap is rejected") {
    TileSpec spec = spec357();
    Placement p{{0, 0}, angle_class(0, 0), {SideLabel::A, SideLabel::B, SideLabel::C}};
    Placement q{{0.5, 0.1}, angle_class(0, 0), {SideLabel::A, SideLabel::B, SideLabel::C}};
    BuildOptions opt;
    opt.fragment_mode = true;
    CHECK_THROWS_AS(build_tiling(spec, {p, q}, std::nullopt, opt), TilingError);
    try {
        build_tiling(spec, {p, q}, std::nullopt, opt);
    } catch (const TilingError& e) {
        CHECK(e.kind == ErrKind::OverlapError);
    }
}

TEST_CASE("near-coincident vertices are an error, not a guess") {
    TileSpec spec = spec357();
    Placement p{{0, 0}, angle_class(0, 0), {SideLabel::A, SideLabel::B, SideLabel::C}};
    Placement q{{3 + 3e-8, 1e-8}, angle_class(0, 1), {SideLabel::C, SideLabel::A, SideLabel::B}};
    BuildOptions opt;
    opt.fragment_mode = true;
    opt.eps = 1e-9;
    try {
        build_tiling(spec, {p, q}, std::nullopt, opt);
        FAIL("expected SnapAmbiguity");
    } catch (const TilingError& e) {
        CHECK(e.kind == ErrKind::SnapAmbiguity);
    }
}

TEST_CASE("bad labels are rejected with the tile named") {
    TileSpec spec = spec357();
    Placement p{{0, 0}, angle_class(0, 0), {SideLabel::A, SideLabel::A, SideLabel::C}};
    BuildOptions opt;
    opt.fragment_mode = true;
    try {
        build_tiling(spec, {p}, std::nullopt, opt);
        FAIL("expected ParseError");
    } catch (const TilingError& e) {
        CHECK(e.kind == ErrKind::ParseError);
        CHECK(std::string(e.what()).find("tile 0") != std::string::npos);
    }
    CHECK_THROWS_AS(labels_from_string("abq"), TilingError);
    CHECK_THROWS_AS(labels_from_string("aab"), TilingError);
    CHECK(labels_from_string("bca") == std::array<SideLabel, 3>{SideLabel::B, SideLabel::C, SideLabel::A});
}

TEST_CASE("transforms preserve structure") {
    TileSpec spec = spec357();
    Placement up{{0, 0}, angle_class(0, 0), {SideLabel::A, SideLabel::B, SideLabel::C}};
    Placement down{{3, 0}, angle_class(3, 0), {SideLabel::A, SideLabel::B, SideLabel::C}};
    BuildOptions opt;
    opt.fragment_mode = true;
    Tiling t = build_tiling(spec, {up, down}, std::nullopt, opt);
    Tiling r = transform_tiling(t, angle_class(1, 2), {10, -4});
    CHECK(r.tiles.size() == 2);
    CHECK(r.vertices.size() == 4);
    CHECK(r.segments.size() == 5);
    CHECK(r.tiles[0].p.dir == angle_class(1, 2));
    CHECK(dist(r.tiles[0].p.anchor, {10, -4}) < 1e-12);
}
