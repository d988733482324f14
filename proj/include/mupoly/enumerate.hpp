#pragma once

#include "mupoly/arith.hpp"
#include "mupoly/budget.hpp"
#include "mupoly/polytope.hpp"

#include <vector>

namespace mupoly {

// A lattice point of the graded cone: x in chart coordinates, at height
// (degree) n, i.e. x lies in the degree-th dilation of the base polytope.
struct GradedPoint {
    IntVec x;
    Int degree;

    bool operator==(const GradedPoint& o) const { return degree == o.degree && x == o.x; }
    bool operator<(const GradedPoint& o) const {
        if (degree != o.degree) return degree < o.degree;
        return x < o.x;
    }
};

// All lattice points of k*P in chart coordinates, lex-sorted and
// deduplicated. Simplices decompose each point uniquely as a fundamental-
// parallelepiped representative plus a vertex combination, so the walk emits
// exactly L(k) points. Other polytopes use an interval recursion over the
// facet system: per prefix, each inequality contributes a bound for the next
// coordinate given the best possible suffix, so descents prune early.
// `threads` > 1 splits the first coordinate range (non-simplex route only);
// output is identical.
std::vector<IntVec> lattice_points(const Polytope& P, const Int& k, Budget& budget,
                                   int threads = 1);

// Lattice points of the half-open fundamental parallelepiped of a
// d-simplex S: all integer combinations sum r_i * (v_i, 1) with 0 <= r_i < 1,
// reported as (spatial part, degree) and sorted by (degree, lex). Contains
// the origin at degree 0; the count is the normalized volume.
std::vector<GradedPoint> parallelepiped_points(const Polytope& S, Budget& budget);

// Same, for a simplex given as d+1 affinely independent chart points; avoids
// building a Polytope per cell when sweeping many simplices.
std::vector<GradedPoint> parallelepiped_points(const std::vector<IntVec>& chart_vertices,
                                               Budget& budget);

// Same construction for a full-dimensional simplicial cone: columns of B
// generate; returns all lattice points of B * [0,1)^n (ungraded).
std::vector<IntVec> fundamental_domain_points(const IntMat& B, Budget& budget);

// A simplex is empty when its only lattice points are its vertices,
// equivalently when its fundamental parallelepiped has no height-1 point.
bool is_empty_simplex(const Polytope& S, Budget& budget);

// All empty d-simplices spanned by lattice points of P, as lex-sorted lists
// of chart points; combinations are visited in lex order of index tuples and
// metered against the subset budget.
std::vector<std::vector<IntVec>> empty_simplices(const Polytope& P, Budget& budget);

} // namespace mupoly
