#include "mupoly/linalg.hpp"

#include "mupoly/errors.hpp"

#include <algorithm>
#include <utility>

namespace mupoly {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows_in) {
    if (rows_in.empty()) return IntMat(0, 0);
    IntMat m(rows_in.size(), rows_in.front().size());
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
        if (rows_in[i].size() != m.cols)
            throw DimensionMismatch("ragged rows in matrix literal");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    }
    return m;
}

IntVec IntMat::row(std::size_t r) const {
    IntVec v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = at(r, j);
    return v;
}

IntVec IntMat::col(std::size_t c) const {
    IntVec v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, c);
    return v;
}

IntMat IntMat::transposed() const {
    IntMat t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMat::RatMat(const IntMat& m) : rows(m.rows), cols(m.cols), a(m.rows * m.cols) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = Rat(m.a[i]);
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
    if (A.cols != B.rows) throw DimensionMismatch("mat_mul shape");
    IntMat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

IntVec mat_vec(const IntMat& A, const IntVec& x) {
    if (A.cols != x.size()) throw DimensionMismatch("mat_vec shape");
    IntVec y(A.rows, Int(0));
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) y[i] += A.at(i, j) * x[j];
    return y;
}

RatVec mat_vec(const RatMat& A, const RatVec& x) {
    if (A.cols != x.size()) throw DimensionMismatch("mat_vec shape");
    RatVec y(A.rows, Rat(0));
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) y[i] += A.at(i, j) * x[j];
    return y;
}

namespace {

// Row operation helpers shared by HNF: all act simultaneously on the work
// matrix and the transform accumulator so H = U*M stays invariant.
struct RowOps {
    IntMat& H;
    IntMat& U;
    int det_sign = 1;

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < H.cols; ++j) std::swap(H.at(i, j), H.at(k, j));
        for (std::size_t j = 0; j < U.cols; ++j) std::swap(U.at(i, j), U.at(k, j));
        det_sign = -det_sign;
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < H.cols; ++j) H.at(i, j) = -H.at(i, j);
        for (std::size_t j = 0; j < U.cols; ++j) U.at(i, j) = -U.at(i, j);
        det_sign = -det_sign;
    }

    void add_multiple(std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < H.cols; ++j) H.at(dst, j) += c * H.at(src, j);
        for (std::size_t j = 0; j < U.cols; ++j) U.at(dst, j) += c * U.at(src, j);
    }

    // Replace rows (p, i) by unimodular combinations so that column j holds
    // gcd at row p and 0 at row i. Determinant of the 2x2 block is +1.
    void gcd_combine(std::size_t p, std::size_t i, std::size_t j) {
        Int a = H.at(p, j), b = H.at(i, j);
        if (b == 0) return;
        if (a == 0) { // plain swap moves b up
            swap_rows(p, i);
            return;
        }
        Int g, s, t;
        // extended gcd: g = s*a + t*b
        {
            Int old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
            while (r != 0) {
                Int q = old_r / r;
                Int tmp = old_r - q * r; old_r = r; r = tmp;
                tmp = old_s - q * s1; old_s = s1; s1 = tmp;
                tmp = old_t - q * t1; old_t = t1; t1 = tmp;
            }
            g = old_r; s = old_s; t = old_t;
            if (g < 0) { g = -g; s = -s; t = -t; }
        }
        Int af = a / g, bf = b / g;
        // new row p = s*row_p + t*row_i ; new row i = -bf*row_p + af*row_i
        for (std::size_t c = 0; c < H.cols; ++c) {
            Int hp = H.at(p, c), hi = H.at(i, c);
            H.at(p, c) = s * hp + t * hi;
            H.at(i, c) = -bf * hp + af * hi;
        }
        for (std::size_t c = 0; c < U.cols; ++c) {
            Int up = U.at(p, c), ui = U.at(i, c);
            U.at(p, c) = s * up + t * ui;
            U.at(i, c) = -bf * up + af * ui;
        }
    }
};

} // namespace

HnfResult hnf(const IntMat& M) {
    HnfResult res;
    res.H = M;
    res.U = IntMat::identity(M.rows);
    RowOps ops{res.H, res.U};

    // Columns right-to-left, pivot rows bottom-up: each finished row ends at
    // its pivot column, giving the lower-triangular echelon shape.
    std::size_t m = M.rows, n = M.cols;
    std::size_t p = m; // pivot row + 1 (avoids signed underflow)
    for (std::size_t jj = n; jj-- > 0 && p > 0;) {
        std::size_t j = jj;
        bool any = false;
        for (std::size_t i = 0; i < p; ++i)
            if (res.H.at(i, j) != 0) { any = true; break; }
        if (!any) continue;
        // Collect the column gcd into row p-1, zeroing rows above it.
        for (std::size_t i = p - 1; i-- > 0;)
            ops.gcd_combine(p - 1, i, j);
        if (res.H.at(p - 1, j) == 0) {
            // All mass was in rows above; move a nonzero up. (Cannot happen:
            // gcd_combine leaves gcd at p-1 whenever any entry was nonzero.)
            throw ConsistencyViolation("hnf pivot vanished");
        }
        if (res.H.at(p - 1, j) < 0) ops.negate_row(p - 1);
        // Reduce the finished rows below this pivot into [0, pivot).
        const Int& piv = res.H.at(p - 1, j);
        for (std::size_t k = p; k < m; ++k) {
            Int q = floor_div(res.H.at(k, j), piv);
            ops.add_multiple(k, p - 1, -q);
        }
        --p;
    }
    res.det_sign_of_u = ops.det_sign;
    return res;
}

namespace {

// Row/column operations for SNF, acting on (D, U, V) with D = U*M*V invariant.
struct SnfOps {
    IntMat& D;
    IntMat& U;
    IntMat& V;

    void row_swap(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < D.cols; ++j) std::swap(D.at(i, j), D.at(k, j));
        for (std::size_t j = 0; j < U.cols; ++j) std::swap(U.at(i, j), U.at(k, j));
    }
    void col_swap(std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < D.rows; ++i) std::swap(D.at(i, j), D.at(i, k));
        for (std::size_t i = 0; i < V.rows; ++i) std::swap(V.at(i, j), V.at(i, k));
    }
    void row_add(std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < D.cols; ++j) D.at(dst, j) += c * D.at(src, j);
        for (std::size_t j = 0; j < U.cols; ++j) U.at(dst, j) += c * U.at(src, j);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < D.rows; ++i) D.at(i, dst) += c * D.at(i, src);
        for (std::size_t i = 0; i < V.rows; ++i) V.at(i, dst) += c * V.at(i, src);
    }
    void row_negate(std::size_t i) {
        for (std::size_t j = 0; j < D.cols; ++j) D.at(i, j) = -D.at(i, j);
        for (std::size_t j = 0; j < U.cols; ++j) U.at(i, j) = -U.at(i, j);
    }
};

} // namespace

SnfResult snf(const IntMat& M) {
    SnfResult res;
    res.D = M;
    res.U = IntMat::identity(M.rows);
    res.V = IntMat::identity(M.cols);
    SnfOps ops{res.D, res.U, res.V};
    IntMat& D = res.D;
    std::size_t m = M.rows, n = M.cols;
    std::size_t t = 0;

    while (t < m && t < n) {
        // Find a nonzero entry of minimal absolute value in the trailing block
        // (minimal pivots keep the elimination short).
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& v = D.at(i, j);
                if (v == 0) continue;
                Int av = abs_int(v);
                if (!found || av < best) { found = true; best = av; pi = i; pj = j; }
            }
        if (!found) break; // trailing block is zero
        ops.row_swap(t, pi);
        ops.col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = floor_div(D.at(i, t), D.at(t, t));
                ops.row_add(i, t, -q);
                if (D.at(i, t) != 0) { // remainder smaller than pivot: promote it
                    ops.row_swap(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = floor_div(D.at(t, j), D.at(t, t));
                ops.col_add(j, t, -q);
                if (D.at(t, j) != 0) {
                    ops.col_swap(t, j);
                    clean = false;
                }
            }
        }
        // Divisibility: pivot must divide every entry of the trailing block;
        // if not, fold the offending row in and redo this step.
        bool redo = false;
        for (std::size_t i = t + 1; i < m && !redo; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                if (D.at(i, j) % D.at(t, t) != 0) {
                    ops.row_add(t, i, 1);
                    redo = true;
                    break;
                }
        if (redo) continue;
        if (D.at(t, t) < 0) ops.row_negate(t);
        ++t;
    }
    return res;
}

std::vector<Int> SnfResult::invariant_factors() const {
    std::vector<Int> f;
    std::size_t k = std::min(D.rows, D.cols);
    for (std::size_t i = 0; i < k; ++i)
        if (D.at(i, i) != 0) f.push_back(D.at(i, i));
    return f;
}

Int det(const IntMat& M) {
    if (M.rows != M.cols) throw DimensionMismatch("det of non-square matrix");
    std::size_t n = M.rows;
    if (n == 0) return 1;
    IntMat A = M;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && A.at(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss: exact division keeps entries as minors.
                A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
            }
            A.at(i, k) = 0;
        }
        prev = A.at(k, k);
    }
    return sign > 0 ? A.at(n - 1, n - 1) : Int(-A.at(n - 1, n - 1));
}

RrefResult rref(const RatMat& M) {
    RrefResult res;
    res.R = M;
    RatMat& R = res.R;
    std::size_t m = R.rows, n = R.cols;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t p = r;
        while (p < m && R.at(p, j) == 0) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t c = 0; c < n; ++c) std::swap(R.at(r, c), R.at(p, c));
        Rat piv = R.at(r, j);
        for (std::size_t c = 0; c < n; ++c) R.at(r, c) /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || R.at(i, j) == 0) continue;
            Rat f = R.at(i, j);
            for (std::size_t c = 0; c < n; ++c) R.at(i, c) -= f * R.at(r, c);
        }
        res.pivot_cols.push_back(j);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const IntMat& M) { return rref(RatMat(M)).rank; }

std::optional<SolveResult> solve_rational(const RatMat& A, const RatVec& b) {
    if (A.rows != b.size()) throw DimensionMismatch("solve_rational shape");
    std::size_t m = A.rows, n = A.cols;
    RatMat aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n) = b[i];
    }
    RrefResult rr = rref(aug);
    // Inconsistent iff some pivot sits in the augmented column.
    for (std::size_t c : rr.pivot_cols)
        if (c == n) return std::nullopt;

    SolveResult out;
    out.x.assign(n, Rat(0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
        is_pivot[rr.pivot_cols[k]] = true;
        out.x[rr.pivot_cols[k]] = rr.R.at(k, n);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        RatVec v(n, Rat(0));
        v[j] = 1;
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v[rr.pivot_cols[k]] = -rr.R.at(k, j);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::optional<SolveResult> solve_rational(const IntMat& A, const IntVec& b) {
    RatVec rb(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rb[i] = Rat(b[i]);
    return solve_rational(RatMat(A), rb);
}

std::vector<IntVec> integer_kernel_basis_rational(const IntMat& A) {
    RatVec zero(A.rows, Rat(0));
    auto sol = solve_rational(RatMat(A), zero);
    std::vector<IntVec> out;
    for (const RatVec& v : sol->kernel) {
        Int lcm = 1;
        for (const Rat& q : v) lcm = lcm / gcd_int(lcm, den(q)) * den(q);
        IntVec w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (lcm / den(v[i]));
        out.push_back(make_primitive(std::move(w)));
    }
    return out;
}

std::optional<RatMat> inverse(const IntMat& M) {
    if (M.rows != M.cols) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = M.rows;
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = Rat(M.at(i, j));
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.R.at(i, n + j);
    return inv;
}

std::vector<IntVec> saturated_lattice_basis(const std::vector<IntVec>& vectors, std::size_t n) {
    // Saturation via double annihilation: K spans the orthogonal complement of
    // span(vectors); the integer kernel of x -> K x is exactly
    // span_Q(vectors) meet Z^n, and the transform rows of an HNF of K^T whose
    // image rows vanish form a basis of it (they extend to a basis of Z^n).
    for (const IntVec& v : vectors)
        if (v.size() != n) throw DimensionMismatch("saturated_lattice_basis vector size");

    IntMat D = IntMat::from_rows(vectors);
    if (vectors.empty()) D = IntMat(0, n);
    std::vector<IntVec> K = integer_kernel_basis_rational(D.rows ? D : IntMat(1, n));
    if (K.empty()) {
        // Full span: the standard basis, canonically.
        std::vector<IntVec> basis;
        for (std::size_t i = 0; i < n; ++i) {
            IntVec e(n, Int(0));
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    IntMat Kt = IntMat::from_rows(K).transposed(); // n x s
    HnfResult h = hnf(Kt);
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < h.H.rows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.H.cols; ++j)
            if (h.H.at(i, j) != 0) { zero = false; break; }
        if (zero) basis.push_back(h.U.row(i));
    }
    // Canonicalize the basis itself through one more HNF so the result depends
    // only on the span of the input.
    if (!basis.empty()) {
        HnfResult h2 = hnf(IntMat::from_rows(basis));
        std::vector<IntVec> out;
        for (std::size_t i = 0; i < h2.H.rows; ++i)
            if (!is_zero_vec(h2.H.row(i))) out.push_back(h2.H.row(i));
        return out;
    }
    return basis;
}

} // namespace mupoly
