#pragma once

#include "tritile/angle.hpp"
#include "tritile/geom.hpp"
#include "tritile/spec.hpp"
#include "tritile/symlen.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tritile {

enum class ErrKind {
    InvalidSpec,
    ParseError,
    OverlapError,
    CoverageError,
    DanglingEdgeError,
    SnapAmbiguity,
    NonSimpleBoundary,
    FrameError,
    NotAKiteOrParallelogram,
    BoundaryNotAllC,
    ClassificationError,
    InconsistentRelations,
};

std::string to_string(ErrKind k);

struct TilingError : std::runtime_error {
    ErrKind kind;
    TilingError(ErrKind k, const std::string& msg) : std::runtime_error(to_string(k) + ": " + msg), kind(k) {}
};

// Authoring form of a tile: anchor vertex, direction class of the first edge,
// and the labels of the three edges walked counterclockwise. The labels fix
// the chirality: cyclic rotations of (a,b,c) are direct copies, the others
// are mirrored.
struct Placement {
    Vec2 anchor;
    AngleClass dir;
    std::array<SideLabel, 3> labels{SideLabel::A, SideLabel::B, SideLabel::C};
};

bool placement_mirrored(const std::array<SideLabel, 3>& labels);
std::string labels_to_string(const std::array<SideLabel, 3>& labels);
std::array<SideLabel, 3> labels_from_string(const std::string& s);

// Interior angle opposite a side, as an exact span.
AngleSpan angle_of(SideLabel s);

struct DerivedEdge {
    int tile = -1;
    int e = 0;  // 0..2 within the tile
    SideLabel label = SideLabel::A;
    AngleClass dir;
    Vec2 from, to;
    int v_from = -1, v_to = -1;
};

struct PlacedTile {
    int id = -1;
    Placement p;
    bool mirrored = false;
    std::array<Vec2, 3> verts{};
    std::array<DerivedEdge, 3> edges{};

    // Interior angle at corner i (exact).
    AngleSpan corner_angle(int i) const;
    // Direction class of the tile's c-edge; the tile's zh value is
    // zh_sign(c_dir) * (a - b + c).
    AngleClass c_edge_dir() const;
};

// A directed tile edge projected onto its carrier line.
struct Fragment {
    int tile = -1;
    int e = 0;
    SideLabel label = SideLabel::A;
    double t0 = 0, t1 = 0;  // interval along the line, t0 < t1
    bool forward = true;    // edge direction equals the line's canonical direction
    int v_lo = -1, v_hi = -1;
};

// Maximal straight run of tile edges on one line. "left" fragments carry
// their tile on the left of the canonical direction, "right" on the right.
struct MaximalSegment {
    int id = -1;
    AngleClass dir;  // canonical: j in [0,3)
    Vec2 u;          // numeric unit vector of dir
    double offset = 0;
    double tmin = 0, tmax = 0;
    std::vector<Fragment> left, right;
    std::vector<int> vertices_on;  // vertex ids on the carrier, sorted by t
    std::vector<double> vertex_t;  // parallel to vertices_on
    bool on_region_boundary = false;
    SymLen left_sum, right_sum;
};

enum class VertexLocation { Corner, Boundary, InternalPi, Internal2Pi, Open };

struct VertexInfo {
    Vec2 pos;
    std::vector<std::pair<int, int>> wedges;  // (tile id, corner index)
    VertexLocation location = VertexLocation::Open;
    AngleSpan wedge_span{};  // exact sum of incident tile angles
    double wedge_sum = 0;    // numeric
};

struct BuildOptions {
    bool fragment_mode = false;
    double eps = -1;  // default_eps() when negative
};

struct Tiling {
    TileSpec spec;
    std::vector<PlacedTile> tiles;
    std::optional<std::vector<Vec2>> region;  // counterclockwise
    std::optional<std::vector<SymLen>> region_side_len;  // per region edge, when known
    bool fragment_mode = false;
    double eps = 1e-9;        // working epsilon, scaled decisions use eps_world
    double eps_world = 1e-9;  // eps * max(1, diameter)
    std::vector<VertexInfo> vertices;
    std::vector<MaximalSegment> segments;

    const DerivedEdge& edge(int tile, int e) const { return tiles[tile].edges[e]; }
    int vertex_at(Vec2 p) const;  // -1 if none within eps_world
};

// Validates and indexes a tile list: snaps vertices, builds maximal segments,
// checks pairwise interior disjointness, and in full mode checks that the
// tiles exactly cover the region. Throws TilingError on violations.
Tiling build_tiling(const TileSpec& spec, const std::vector<Placement>& placements,
                    std::optional<std::vector<Vec2>> region, BuildOptions opt = {});

// Vertices and edges of a single placement, without cross-tile validation.
// Throws if the labels are not a permutation or the walk fails to close.
PlacedTile derive_tile(const TileSpec& spec, const Placement& p, int id, double eps_close);

// The same placed tile, re-anchored so its first edge is the a edge. Each
// tile has three cyclic placement representations; this picks one, which
// makes placements comparable.
Placement canonical_placement(const TileSpec& spec, const Placement& p);

struct WalkStep {
    int tile = -1, e = 0;
    int v_from = -1, v_to = -1;
    SideLabel label = SideLabel::A;
    AngleClass dir;
    SymLen len;
};

// Directed boundary edges in counterclockwise order, starting at the
// lowest-then-leftmost boundary vertex. Requires a region whose boundary is
// completely covered by tile edges.
std::vector<WalkStep> boundary_walk(const Tiling& t);

// Rebuilds the tiling rotated by a direction class about the origin and then
// translated. Rotation must be a class so the angle bookkeeping stays exact.
Tiling transform_tiling(const Tiling& t, AngleClass rot, Vec2 translation);

std::vector<Placement> placements_of(const Tiling& t);

}  // namespace tritile
