#include "mupoly/ehrhart.hpp"

#include "mupoly/errors.hpp"

#include <vector>

namespace mupoly {

namespace {

Int binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= Int(n - i);
        r /= Int(i + 1);
    }
    return r;
}

void verify_invariants(const Polytope& P, const DeltaVector& dv, const Int& count1) {
    std::size_t d = P.dim();
    if (dv.delta.size() != d + 1) throw ConsistencyViolation("delta vector length");
    if (dv.delta[0] != 1) throw ConsistencyViolation("delta_0 != 1");
    if (d >= 1 && dv.delta[1] != count1 - Int(d + 1))
        throw ConsistencyViolation("delta_1 != L(1) - (d+1)");
    for (const Int& x : dv.delta)
        if (x < 0) throw ConsistencyViolation("negative delta entry");
    if (dv.volume() != P.normalized_volume())
        throw ConsistencyViolation("delta sum != normalized volume");
}

} // namespace

DeltaVector delta_vector_by_counting(const Polytope& P, Budget& budget, int threads) {
    std::size_t d = P.dim();
    std::vector<Int> counts(d + 1);
    counts[0] = 1;
    for (std::size_t k = 1; k <= d; ++k)
        counts[k] = Int(lattice_points(P, Int(k), budget, threads).size());

    // delta_i = sum_j (-1)^(i-j) C(d+1, i-j) L(j)
    DeltaVector dv;
    dv.delta.assign(d + 1, Int(0));
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Int term = binom(d + 1, i - j) * counts[j];
            dv.delta[i] += ((i - j) % 2 == 0) ? term : Int(-term);
        }
    verify_invariants(P, dv, d >= 1 ? counts[1] : Int(1));
    return dv;
}

DeltaVector delta_vector(const Polytope& P, Budget& budget, int threads) {
    std::size_t d = P.dim();
    if (!P.is_simplex()) return delta_vector_by_counting(P, budget, threads);

    // Simplex route: delta_i counts fundamental-parallelepiped points at
    // height i.
    DeltaVector dv;
    dv.delta.assign(d + 1, Int(0));
    for (const GradedPoint& g : parallelepiped_points(P, budget)) {
        std::size_t deg = (std::size_t)(unsigned long long)g.degree;
        dv.delta[deg] += 1;
    }
    Int count1 = Int(lattice_points(P, 1, budget, threads).size());
    verify_invariants(P, dv, count1);

    // Cross-check against the counting route when it looks affordable: the
    // largest enumeration is L(d), roughly volume * d^d / d!.
    if (d <= 5) {
        DeltaVector other = delta_vector_by_counting(P, budget, threads);
        if (other.delta != dv.delta)
            throw ConsistencyViolation("delta routes disagree on a simplex");
    }
    return dv;
}

int mu_ehr(const DeltaVector& dv) {
    std::size_t i = dv.top_nonzero_index();
    return i == 0 ? 1 : (int)i;
}

int interior_dilation(const Polytope& P, Budget& budget, const DeltaVector* dv) {
    std::size_t d = P.dim();
    int k0 = -1;
    for (int k = 1; k <= (int)d + 1; ++k) {
        for (const IntVec& y : lattice_points(P, Int(k), budget))
            if (P.chart_interior_dilated(y, Int(k))) {
                k0 = k;
                break;
            }
        if (k0 > 0) break;
    }
    if (k0 < 0) throw ConsistencyViolation("no interior point up to dilation d+1");
    if (dv && k0 != (int)(d + 1 - dv->top_nonzero_index()))
        throw ConsistencyViolation("interior dilation violates reciprocity");
    return k0;
}

} // namespace mupoly
