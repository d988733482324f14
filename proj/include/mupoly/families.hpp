#pragma once

#include "mupoly/polytope.hpp"

#include <utility>

namespace mupoly {

// Named fixture polytopes with exact ambient coordinates, used as
// deterministic regression inputs across the test suite and the CLI.

// Empty d-simplex conv{0, e_1, ..., e_{d-1}, e_1+...+e_j + j*e_d} whose six
// dilation invariants all equal j. Requires d >= 3 and 2 <= j <= d-1.
Polytope berkeley(int d, int j);

// Simplex of dimension d = 2m-1 with vertices 0, e_1, ..., e_{d-1} and
// (m-1, ..., m-1, m). Requires m >= 4. Its Hilbert and IDP thresholds split:
// holes reach degree 2m-2 while the Hilbert basis stops at degree 2.
Polytope example_2_4(int m);

// Simplex conv{0, e_1, ..., e_{d-1}, (d+1, ..., d+1, d+2)} with an interior
// lattice point at the first dilation, so the Ehrhart threshold is d while
// the hole threshold stays near d/2. Requires d >= 3.
Polytope example_2_5(int d);

// The 13-dimensional block simplex: convex hull of 0 and the rows of
// diag(A, B) where A is the 7x7 matrix of example_2_4(4) and B is 6x6 with
// last row (1,1,1,1,1,2). Its Hilbert threshold (3) is strictly below its
// IDP threshold (4).
Polytope example_2_6();

// Prism-like polytope with 2(d+1) vertices v_0..v_d and v_j + e_d, where
// v_d = e_1+...+e_{d-1} + M*e_d with M = d(d-2)+1. Hilbert threshold d-1
// strictly above the IDP thresholds d-2. Requires d >= 4.
Polytope boston(int d);

// Pair of IDP polytopes in Z^3 (a unimodular triangle and a primitive
// segment) whose Minkowski sum fails IDP.
std::pair<Polytope, Polytope> minkowski_pair();

}  // namespace mupoly
