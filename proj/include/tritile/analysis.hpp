#pragma once

#include "tritile/tiling.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tritile {

// Counts of vertex types. With incommensurable angles every non-corner
// vertex carries equally many alpha and beta wedges, so the gamma count
// pins the type: pi-vertices are simple (1,1,1) or star (3,3,0); 2pi-vertices
// are center (0,0,3), double_star (6,6,0), gamma_star (4,4,1), or
// double_simple (2,2,2). Region corners and open fragment vertices are not
// typed here; corners feed corner_contribution instead.
struct VertexCensus {
    long simple = 0, star = 0, center = 0;
    long double_star = 0, gamma_star = 0, double_simple = 0;
    long other = 0;
    long n_alpha = 0, n_beta = 0, n_gamma = 0;  // wedge totals over all vertices

    long S() const { return star + gamma_star; }
    long S2() const { return double_star; }
    long C() const { return center; }
};

VertexCensus classify_vertices(const Tiling& t);

// Sum over region corners of (#alpha + #beta - 2#gamma).
long corner_contribution(const Tiling& t);

// Per-type totals of (#alpha + #beta - 2#gamma) plus the corner share. Zero
// for every complete tiling whose vertices all typed cleanly. A nonzero
// return is a finding, not an error.
long census_identity_check(const VertexCensus& cen, long corner_contrib);

// One-way links between vertices along a carrier whose fragments on one side
// form an unbroken run of x-labeled edges. The tail is the earliest vertex of
// the run that has tiles on both sides of the carrier; the head ends the run,
// is not touched by any tile on the far side, and the carrier continues past
// it with a non-x edge.
struct GammaLink {
    int tail = -1, head = -1;  // vertex ids
    int segment = -1;          // carrier id
    bool run_on_left = true;   // which side carried the labeled run
};

struct GammaGraph {
    SideLabel label = SideLabel::A;
    std::vector<GammaLink> links;
    std::map<int, int> in_degree, out_degree;  // vertex id -> count, absent = 0

    int in(int v) const;
    int out(int v) const;
    int f(int v) const { return out(v) - in(v); }
};

GammaGraph build_gamma_graph(const Tiling& t, SideLabel label);

// Segment-extension audits. Wherever a c edge meets a non-c edge end to end
// across a pi-vertex Q, a two-sided c/a or c/b carrier must leave Q; wherever
// an a edge meets a non-a edge across a simple vertex, an a/b or a/c carrier
// must leave it. Failures on a validated tiling indicate a bug, not a fact
// about the tiling.
enum class AuditRule { CAfterPiVertex, AAfterSimpleVertex };

struct ExtensionAudit {
    AuditRule rule;
    int vertex = -1;
    int carrier = -1;        // segment holding the hypothesis pair
    bool pass = false;
    int found_carrier = -1;  // segment holding the emanating pair, -1 if none
};

std::vector<ExtensionAudit> audit_extension_lemmas(const Tiling& t);

// j*iso = p*u + q*v with the isolated side iso and the remaining labels u < v
// in a,b,c order. Extracted from an internal segment whose two side sums
// disagree symbolically.
enum class RelationKind { A, B, C };

struct Relation {
    RelationKind kind = RelationKind::A;
    long j = 0, p = 0, q = 0;
    int witness = -1;  // segment id, -1 when synthesized

    friend bool operator==(const Relation& x, const Relation& y) {
        return x.kind == y.kind && x.j == y.j && x.p == y.p && x.q == y.q;
    }
};

std::string to_string(const Relation& r);

std::vector<Relation> extract_relations(const Tiling& t);

// Forced side ratios from a relation set: the rational kernel of the
// coefficient rows. Throws InconsistentRelations when the rows force a trivial
// or non-positive solution.
struct DeducedRatios {
    std::optional<Rat> a_over_b, c_over_b;
};

DeducedRatios deduce_ratios(const std::vector<Relation>& rels);

// Closed form for one a-relation (j,p,q) and one b-relation (J,P,Q):
// a/b = (Jq + pQ) / (jQ + qP), defined when the denominator is nonzero.
std::optional<Rat> stubborn_ratio(const Relation& a_rel, const Relation& b_rel);

enum class Conclusion {
    CommensurableSidesForced,
    ExceptionalCaseEquilateral,
    ExceptionalCase2a2bPi3,
    InconsistentTiling,
    Undetermined,
};

std::string to_string(Conclusion c);

struct Verdict {
    bool applicable = false;
    std::string gate_reason;  // set when not applicable
    VertexCensus census;
    long corner_contrib = 0;
    long census_residual = 0;
    std::vector<Relation> relations;
    DeducedRatios ratios;
    bool all_c_boundary = false;
    std::vector<long> side_c_counts;  // c edges per region side, walk order
    bool corners_equilateral = false;
    bool corners_2a_2b_pi3 = false;
    std::vector<ExtensionAudit> audits;
    Conclusion conclusion = Conclusion::Undetermined;
};

// Full pipeline over a tiled triangular region dissimilar to the tile:
// census and its identity, relations and forced ratios, boundary profile,
// and the exceptional-shape checks.
Verdict commensurability_verdict(const Tiling& t);

}  // namespace tritile
