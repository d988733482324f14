#pragma once

#include "mupoly/arith.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mupoly {

// Dense row-major integer matrix. Small and value-semantic; all the exact
// normal-form algorithms live on top of it.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<IntVec>& rows_in);

    IntVec row(std::size_t r) const;
    IntVec col(std::size_t c) const;
    IntMat transposed() const;

    bool operator==(const IntMat&) const = default;
};

struct RatMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
    explicit RatMat(const IntMat& m);

    Rat& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

IntMat mat_mul(const IntMat& A, const IntMat& B);
IntVec mat_vec(const IntMat& A, const IntVec& x);
RatVec mat_vec(const RatMat& A, const RatVec& x);

// Row-style Hermite normal form H = U*M with U unimodular. H is lower
// triangular in the echelon sense: each nonzero row ends at its pivot column,
// pivot columns strictly increase with the row index, pivots are positive,
// and in each pivot column the entries of later rows are reduced into
// [0, pivot). Rank-deficient input leaves the zero rows at the top.
struct HnfResult {
    IntMat H;
    IntMat U;
    int det_sign_of_u = 1; // determinant of U is +1 or -1
};
HnfResult hnf(const IntMat& M);

// Smith normal form D = U*M*V with U, V unimodular, D diagonal with
// nonnegative invariant factors d1 | d2 | ... (zeros trailing).
struct SnfResult {
    IntMat D;
    IntMat U;
    IntMat V;
    std::vector<Int> invariant_factors() const;
};
SnfResult snf(const IntMat& M);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMat& M);

std::size_t rank(const IntMat& M);

// Reduced row echelon form over Q; returns rank and pivot columns in-place.
struct RrefResult {
    RatMat R;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};
RrefResult rref(const RatMat& M);

// Exact solve A x = b over Q. Returns nullopt when inconsistent; otherwise one
// particular solution (free variables set to 0) plus a basis of the kernel of
// A, so underdetermined systems are fully described.
struct SolveResult {
    RatVec x;
    std::vector<RatVec> kernel;
};
std::optional<SolveResult> solve_rational(const IntMat& A, const IntVec& b);
std::optional<SolveResult> solve_rational(const RatMat& A, const RatVec& b);

// Basis of {x in Q^n : A x = 0}, rows cleared to primitive integer vectors.
std::vector<IntVec> integer_kernel_basis_rational(const IntMat& A);

// Exact inverse over Q; nullopt if singular.
std::optional<RatMat> inverse(const IntMat& M);

// Basis (as rows) of the saturation span_Q(vectors) meet Z^n: the full lattice of
// integer points in the rational span, not merely the Z-span of the input.
// Canonical: depends only on the span. Returns an empty list for span {0}.
std::vector<IntVec> saturated_lattice_basis(const std::vector<IntVec>& vectors, std::size_t n);

} // namespace mupoly
