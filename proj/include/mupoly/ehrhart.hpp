#pragma once

#include "mupoly/budget.hpp"
#include "mupoly/enumerate.hpp"
#include "mupoly/polytope.hpp"

#include <vector>

namespace mupoly {

// The delta vector (h*-vector) of a d-dimensional lattice polytope:
// sum_k L(k) t^k = (sum_i delta_i t^i) / (1-t)^{d+1}.
struct DeltaVector {
    std::vector<Int> delta; // indices 0..d

    Int volume() const {
        Int s = 0;
        for (const Int& x : delta) s += x;
        return s;
    }
    // largest index with a nonzero entry (0 when only delta_0 = 1 survives)
    std::size_t top_nonzero_index() const {
        for (std::size_t i = delta.size(); i-- > 0;)
            if (delta[i] != 0) return i;
        return 0;
    }
};

// Delta vector. Simplices go through the fundamental-parallelepiped degree
// histogram; everything else through counting L(1..d) and inverting the
// Ehrhart series. When both routes are affordable they are cross-checked.
// Invariants (delta_0 = 1, delta_1 = L(1)-(d+1), nonnegativity, sum = volume)
// are verified before returning.
DeltaVector delta_vector(const Polytope& P, Budget& budget, int threads = 1);

// Counting route only; exposed so tests can compare the two independently.
DeltaVector delta_vector_by_counting(const Polytope& P, Budget& budget, int threads = 1);

// max{i >= 1 : delta_i != 0}, by convention 1 when the vector is (1,0,...,0).
int mu_ehr(const DeltaVector& dv);

// Smallest k >= 1 such that the k-th dilation has an interior lattice point.
// If the delta vector is supplied the reciprocity identity
// k0 = (d+1) - top_nonzero_index is asserted.
int interior_dilation(const Polytope& P, Budget& budget, const DeltaVector* dv = nullptr);

} // namespace mupoly
