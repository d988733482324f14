#pragma once

#include "mupoly/budget.hpp"
#include "mupoly/enumerate.hpp"
#include "mupoly/polytope.hpp"

#include <map>
#include <vector>

namespace mupoly {

// Minimal Hilbert basis of the graded cone over P, sorted by (degree, lex).
// Degree-1 elements are exactly the lattice points of P; higher candidates are
// confined to degrees <= max(1, d-1). When P is an empty simplex the
// candidates shrink further, to the fundamental-parallelepiped points, which
// keeps high dimensions tractable. Minimality is re-verified by a pairwise
// post-pass.
std::vector<GradedPoint> hilbert_basis_graded(const Polytope& P, Budget& budget, int threads = 1);

// Maximal degree of a graded Hilbert basis element (1 for the empty corner
// cases; every basis has degree-1 elements).
int mu_hilb_from_basis(const std::vector<GradedPoint>& basis);
int mu_hilb(const Polytope& P, Budget& budget, int threads = 1);

// Minimal Hilbert basis of the pointed cone spanned by `generators`
// (lower-dimensional spans are reduced to a chart first). Lex-sorted.
// Throws NotPointed when the cone contains a line.
std::vector<IntVec> hilbert_basis_pointed(const std::vector<IntVec>& generators, Budget& budget);

// A hole: a graded point that lies in the cone over P but is not a sum of
// degree-1 points, together with the empty simplex whose parallelepiped
// exhibited it (chart vertices, first producer in enumeration order).
struct Hole {
    GradedPoint point;
    std::vector<IntVec> witness_simplex;
};

// Indecomposable nonzero parallelepiped points across all empty d-simplices
// spanned by lattice points of P, sorted by (degree, lex). Hole degrees are
// verified to lie in [2, d-1].
std::vector<Hole> box_points(const Polytope& P, Budget& budget);

// Max hole degree, or 1 when there are no holes.
int mu_hole_from_holes(const std::vector<Hole>& holes);
int mu_hole(const Polytope& P, Budget& budget);

// Decides whether a graded point is a sum of degree-1 lattice points of P.
// Memoized; reuse one instance across related queries.
class Decomposer {
  public:
    Decomposer(const Polytope& P, Budget& budget);
    bool is_decomposable(const GradedPoint& p);

  private:
    const Polytope& poly_;
    Budget& budget_;
    std::vector<IntVec> degree_one_;
    std::map<GradedPoint, bool> memo_;
    std::size_t hint_ = 0; // last successful first summand, tried first
};

bool is_decomposable(const GradedPoint& p, const Polytope& P, Budget& budget);

} // namespace mupoly
