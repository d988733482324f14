#pragma once

#include "mupoly/budget.hpp"
#include "mupoly/polytope.hpp"
#include "mupoly/profile.hpp"

#include <utility>
#include <vector>

namespace mupoly {

// Finite simple connected graph on vertices 1..vertex_count with a sorted,
// duplicate-free edge list {i, j}, i < j.
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    // Validates labels, simplicity (no loops or repeated edges) and
    // connectivity; normalizes each pair to i < j and sorts the list.
    static SimpleGraph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

    std::vector<std::vector<int>> adjacency() const; // 1-based neighbor lists
};

// A chordless cycle of odd length, recorded as its vertex sequence in
// canonical orientation: smallest vertex first, second vertex smaller than
// the last.
struct OddCycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const OddCycle& o) const { return vertices == o.vertices; }
    bool operator<(const OddCycle& o) const { return vertices < o.vertices; }
};

// Two distinct minimal odd cycles with no edge of the graph joining a vertex
// of one to a vertex of the other (in particular vertex-disjoint: a shared
// vertex would make the neighboring cycle edges such joins).
struct ExceptionalPair {
    OddCycle first, second;       // first < second canonically
    int m = 0;                    // (length + length') / 2
    IntVec e;                     // ambient indicator vector of the vertex union
};

// Convex hull of { e_i + e_j : {i,j} an edge }.
Polytope edge_polytope(const SimpleGraph& g);

// All chordless odd cycles, each reported once in canonical orientation,
// sorted lexicographically by vertex sequence.
std::vector<OddCycle> minimal_odd_cycles(const SimpleGraph& g, Budget& budget);

// All exceptional pairs of minimal odd cycles, sorted by the two sequences.
std::vector<ExceptionalPair> exceptional_pairs(const SimpleGraph& g, Budget& budget);

// True when no pair of distinct odd cycles is exceptional; equivalent to the
// edge polytope satisfying IDP at dilation 1. Checking minimal cycles
// suffices: an exceptional pair of odd cycles forces one on minimal ones.
bool odd_cycle_condition(const SimpleGraph& g, Budget& budget);

// Closed form for the very-ampleness and Hilbert-degree thresholds of an
// edge polytope: max m over exceptional pairs, or 1 when none exist.
int mu_va_hilb_graph(const SimpleGraph& g, Budget& budget);

// Reading of "distinct cycles" in the hole-degree closed form: either each
// cycle is used in at most one pair (the default, which reproduces the
// reference values) or the chosen pairs must additionally be pairwise
// vertex-disjoint.
enum class HoleMatchingMode { DistinctCycles, VertexDisjoint };

// Closed form for the hole threshold: maximum total weight of a matching in
// the pairing graph whose nodes are the minimal odd cycles and whose edges
// are the exceptional pairs weighted by m; 1 when no pair exists.
int mu_hole_graph(const SimpleGraph& g, Budget& budget,
                  HoleMatchingMode mode = HoleMatchingMode::DistinctCycles);

// Closed-form va/hilb/hole plus the generic midp/idp thresholds of the edge
// polytope. The generic scans can outgrow any reasonable budget (dilations
// of a high-dimensional polytope), in which case the thresholds come back as
// brackets: lower = best dilation shown non-IDP plus one (at least the
// closed-form va), upper = the hole threshold, which always yields IDP.
struct GraphProfile {
    int va = 1, hilb = 1, hole = 1;
    std::vector<OddCycle> cycles;
    std::vector<ExceptionalPair> pairs;
    bool midp_exact = false;
    int midp_lower = 1, midp_upper = 1;
    bool idp_exact = false;
    int idp_lower = 1, idp_upper = 1;
};

GraphProfile graph_profile(const SimpleGraph& g, const RunConfig& cfg);

} // namespace mupoly
