#pragma once

#include "tritile/tiling.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tritile {

// Signed length of a directed edge: (-1)^j * |edge| where j counts pi/3 steps
// of the edge direction relative to the frame. Lengths stay symbolic.
ZhValue zh_edge(const DerivedEdge& e, AngleClass frame = {0, 0});

// Sum over the tile's three directed edges. Equals
// zh_sign(c_edge_dir - frame) * (a - b + c) for every tile.
ZhValue zh_tile(const PlacedTile& t, AngleClass frame = {0, 0});

struct TileZh {
    int tile = -1;
    AngleClass c_dir;  // direction class of the tile's c edge
    ZhValue value;
};

struct ZhReport {
    ZhValue zh_tiling;    // sum over tiles
    ZhValue zh_boundary;  // sum over the directed boundary walk
    std::vector<TileZh> per_tile;
    AngleClass frame;  // direction rebased to class (0,0)
};

// Both sums for a tiled region. The frame defaults to the direction of the
// first boundary walk step (the walk starts at the lowest-then-leftmost
// vertex); pass one explicitly to compare tilings in a common frame.
// Requires a region; throws FrameError otherwise. The two sums agree exactly
// whenever the region is fully tiled and facing seam fragments carry equal
// side labels; a coverage hole (fragment mode) shows up as a difference.
ZhReport zh_report(const Tiling& t, std::optional<AngleClass> frame = std::nullopt);

// The pair's zh sum, which vanishes for any two tiles whose c edges are
// anti-aligned on one carrier line with interiors on opposite sides: kites,
// parallelograms, and their translated "virtual" variants. Throws
// NotAKiteOrParallelogram when the tiles are not in that position.
ZhValue zh_kite_parallelogram_check(const PlacedTile& t1, const PlacedTile& t2, double eps = -1);

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (left tile, right tile) along one carrier
    std::vector<int> unmatched;              // tiles whose c edge found no partner
};

// Pair c fragments on opposite sides of each maximal segment in positional
// order. Tiles whose c edge lies on the region boundary (or otherwise faces
// no partner) land in unmatched; that is a report, not an error.
Matching match_c_internal(const Tiling& t);

// Append one tooth per boundary edge, oriented so its c edge lies on the old
// boundary: each boundary tile gains a kite or parallelogram partner and the
// new boundary consists of the teeth's a and b edges only. The region grows
// by the teeth; the frame of the input is the natural frame for reports on
// the result. Requires every boundary edge to be a c edge (BoundaryNotAllC).
// A tiling without a region is returned unchanged.
Tiling sawtooth_augment(const Tiling& t);

// Symbolic boundary zh after sawtooth augmentation, from a profile of
// (side direction class, c-edge count) pairs. Accumulated tooth by tooth over
// the teeth's a and b edge classes; no geometry involved.
ZhValue sawtooth_profile_zh(const std::vector<std::pair<AngleClass, long>>& sides,
                            AngleClass frame = {0, 0});

}  // namespace tritile
