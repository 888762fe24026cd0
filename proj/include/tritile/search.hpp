#pragma once

#include <tritile/tiling.hpp>

#include <map>
#include <set>
#include <vector>

namespace tritile {

// Backtracking enumeration of tilings of a convex region by the tile.
//
// The search always extends at the lexicographically least point of the
// closed uncovered set. At that point any covering tile must place a corner
// flush against the start of the chosen angular gap (an edge sliding through
// it would reach lexicographically smaller uncovered territory), so the
// branching factor is at most six: three corners times two chiralities.
// Angle fitting is exact class arithmetic; only coordinate coincidences go
// through epsilon comparisons.

enum class PruneRule {
    AngleCensus,      // a vertex gap narrower than every tile corner is dead
    SegmentRelation,  // an uncovered run on a region side shorter than min(a,b) is dead
    ZhFeasibility,    // experimental: remaining tiles cannot bridge the zh deficit
};

std::string to_string(PruneRule r);

struct SearchConfig {
    TileSpec spec;
    std::vector<Vec2> region;  // simple polygon, convex; any winding
    int max_tiles = 0;
    bool allow_mirrored = true;
    std::set<PruneRule> pruning = {PruneRule::AngleCensus, PruneRule::SegmentRelation};
    int worker_count = 1;   // root subtrees explored in parallel; results are
                            // merged in root-candidate order, so output does
                            // not depend on scheduling
    long max_nodes = 0;     // 0 = unbounded; exceeding it stops the search
                            // and clears SearchStats::complete
    double eps = -1;        // default_eps() when negative
};

struct SearchStats {
    long nodes = 0;
    std::map<PruneRule, long> pruned;
    double wall_seconds = 0;
    bool complete = true;  // false when max_nodes stopped the search early
};

struct SearchResult {
    std::vector<Tiling> tilings;  // validated, deduplicated under the region's symmetries
    SearchStats stats;
};

// An isometry mapping the region polygon onto itself: a rotation by `cls`
// about `center`, or, when `reflection` is set, the reflection through
// `center` whose doubled axis angle is `cls`. Used to fold congruent results.
struct RegionSym {
    bool reflection = false;
    AngleClass cls;
    Vec2 center;
};

std::vector<RegionSym> region_symmetries(const TileSpec& spec, const std::vector<Vec2>& region,
                                         double eps = -1);

// The image of a placement under a region symmetry.
Placement apply_symmetry(const TileSpec& spec, const RegionSym& s, const Placement& p);

// Partial state handed to frontier_placements: the config plus the tiles
// placed so far.
struct SearchState {
    const SearchConfig* cfg = nullptr;
    std::vector<Placement> placed;
};

// All geometrically valid placements filling the canonical gap slot at the
// frontier point. Empty when the region is fully covered or nothing fits.
// On an empty state the candidates all anchor a corner at the region's
// lexicographically least corner.
std::vector<Placement> frontier_placements(const SearchState& state);

// Exhaustive enumeration of complete tilings with at most max_tiles tiles.
// Every returned tiling passes full build validation; congruent copies under
// the region's symmetry group are folded to one representative. Result order
// is deterministic for any worker_count as long as the node budget is not
// hit.
SearchResult enumerate(const SearchConfig& cfg);

// Reference enumerator for cross-checking: same frontier point, but branches
// over every open gap slot instead of one canonical slot, never prunes, and
// deduplicates at emit time. Exponentially slower; keep max_tiles small.
SearchResult enumerate_naive(const SearchConfig& cfg);

}  // namespace tritile
