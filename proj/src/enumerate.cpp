#include "mupoly/enumerate.hpp"

#include "mupoly/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>

namespace mupoly {

namespace {

// Shared, thread-safe point meter for one enumeration run. Budget totals are
// folded back in when the run finishes.
struct Meter {
    std::atomic<std::int64_t> count{0};
    std::int64_t cap;
    Budget* budget;

    explicit Meter(Budget& b) : cap(b.point_cap), budget(&b) { count = b.points_seen; }

    void charge() {
        std::int64_t c = ++count;
        if (c > cap) throw BudgetExceeded("point cap " + std::to_string(cap) + " reached", c);
        if ((c & 1023) == 0) budget->check_time();
    }

    void finish() { budget->points_seen = count.load(); }
};

struct IneqData {
    IntVec a;
    Int b;
    // suffix_min[t] = min over the k=1 coordinate box of sum_{j>=t} a_j x_j;
    // scales linearly with the dilation factor.
    std::vector<Int> suffix_min;
};

struct EnumCtx {
    std::size_t d;
    std::vector<IneqData> ineqs;
    IntVec lo, hi; // per-coordinate vertex ranges at k=1
    Int k;
};

// Depth-first over coordinates t..d-1 with the prefix already fixed.
// `fixed[i]` carries sum_{j<t} a_ij x_j for each inequality.
void descend(const EnumCtx& ctx, std::size_t t, IntVec& point, std::vector<Int>& fixed,
             Meter& meter, std::vector<IntVec>& out) {
    // Metered per search node, not per emitted point: when the box relaxation
    // is loose the recursion can visit many prefixes per point, and the cap
    // must bound that work, not just the output size.
    meter.charge();
    if (t == ctx.d) {
        out.push_back(point);
        return;
    }
    Int lo = ctx.k * ctx.lo[t];
    Int hi = ctx.k * ctx.hi[t];
    for (std::size_t i = 0; i < ctx.ineqs.size() && lo <= hi; ++i) {
        const IneqData& q = ctx.ineqs[i];
        // best possible contribution of the strictly-later coordinates
        Int residual = ctx.k * q.b - fixed[i] - ctx.k * q.suffix_min[t + 1];
        const Int& c = q.a[t];
        if (c > 0) {
            Int ub = floor_div(residual, c);
            if (ub < hi) hi = ub;
        } else if (c < 0) {
            Int lb = ceil_div(residual, c);
            if (lb > lo) lo = lb;
        } else if (residual < 0) {
            return; // even the most favorable suffix violates inequality i
        }
    }
    for (Int x = lo; x <= hi; ++x) {
        point[t] = x;
        for (std::size_t i = 0; i < ctx.ineqs.size(); ++i)
            fixed[i] += ctx.ineqs[i].a[t] * x;
        descend(ctx, t + 1, point, fixed, meter, out);
        for (std::size_t i = 0; i < ctx.ineqs.size(); ++i)
            fixed[i] -= ctx.ineqs[i].a[t] * x;
    }
    point[t] = 0;
}

// Simplex route: every lattice point of k*S decomposes uniquely as one
// fundamental-parallelepiped representative plus a nonnegative combination of
// the lifted vertices filling the remaining height. Walking the weak
// compositions emits exactly L(k) points; the interval recursion below can
// instead scan enormous empty prefix boxes when the simplex is thin (deep
// vertices make the coordinate box a very loose relaxation).
std::vector<IntVec> simplex_points(const Polytope& S, const Int& k,
                                   const std::vector<GradedPoint>& box, Meter& meter) {
    const std::vector<IntVec>& v = S.chart_vertices();
    const std::size_t d = S.dim();
    std::vector<IntVec> out;
    IntVec cur(d, Int(0));
    std::function<void(std::size_t, const Int&)> compose = [&](std::size_t j, const Int& rem) {
        if (j == d) {
            IntVec leaf = cur;
            for (std::size_t i = 0; i < d; ++i) leaf[i] += rem * v[d][i];
            meter.charge();
            out.push_back(std::move(leaf));
            return;
        }
        for (Int c = 0; c <= rem; ++c) {
            if (c > 0)
                for (std::size_t i = 0; i < d; ++i) cur[i] += v[j][i];
            compose(j + 1, rem - c);
        }
        for (std::size_t i = 0; i < d; ++i) cur[i] -= rem * v[j][i];
    };
    for (const GradedPoint& g : box) {
        if (g.degree > k) continue;
        cur = g.x;
        compose(0, k - g.degree);
    }
    std::sort(out.begin(), out.end());
    return out;
}

EnumCtx build_ctx(const Polytope& P, const Int& k) {
    EnumCtx ctx;
    ctx.d = P.dim();
    ctx.k = k;
    ctx.lo = P.chart_min();
    ctx.hi = P.chart_max();
    for (const Facet& f : P.hrep().facets) {
        IneqData q{f.a, f.b, {}};
        q.suffix_min.assign(ctx.d + 1, Int(0));
        for (std::size_t t = ctx.d; t-- > 0;) {
            Int c0 = q.a[t] * ctx.lo[t];
            Int c1 = q.a[t] * ctx.hi[t];
            q.suffix_min[t] = q.suffix_min[t + 1] + (c0 < c1 ? c0 : c1);
        }
        ctx.ineqs.push_back(std::move(q));
    }
    return ctx;
}

} // namespace

std::vector<IntVec> lattice_points(const Polytope& P, const Int& k, Budget& budget,
                                   int threads) {
    if (k <= 0) throw BadParameters("dilation factor must be positive");
    Meter meter(budget);
    if (P.dim() == 0) {
        meter.charge();
        meter.finish();
        return {IntVec{}};
    }
    if (P.is_simplex()) {
        std::vector<GradedPoint> box = parallelepiped_points(P, budget);
        meter.count = budget.points_seen; // the domain walk charged the budget directly
        std::vector<IntVec> out = simplex_points(P, k, box, meter);
        meter.finish();
        return out;
    }
    EnumCtx ctx = build_ctx(P, k);

    std::vector<IntVec> out;
    if (threads <= 1 || ctx.d < 2) {
        IntVec point(ctx.d, Int(0));
        std::vector<Int> fixed(ctx.ineqs.size(), Int(0));
        descend(ctx, 0, point, fixed, meter, out);
        meter.finish();
        return out;
    }

    // Split the first coordinate range into contiguous chunks; each task runs
    // the same recursion with x_0 restricted, so concatenation in chunk order
    // reproduces the sequential lex order exactly.
    meter.charge(); // the root node, so sequential and parallel totals agree
    Int lo0 = k * ctx.lo[0], hi0 = k * ctx.hi[0];
    Int span = hi0 - lo0 + 1;
    int nchunk = threads;
    if (span < nchunk) nchunk = (int)span;
    std::vector<std::future<std::vector<IntVec>>> futs;
    for (int c = 0; c < nchunk; ++c) {
        Int a = lo0 + span * c / nchunk;
        Int b = lo0 + span * (c + 1) / nchunk - 1;
        futs.push_back(std::async(std::launch::async, [&, a, b]() {
            std::vector<IntVec> part;
            IntVec point(ctx.d, Int(0));
            std::vector<Int> fixed(ctx.ineqs.size(), Int(0));
            for (Int x = a; x <= b; ++x) {
                point[0] = x;
                for (std::size_t i = 0; i < ctx.ineqs.size(); ++i)
                    fixed[i] = ctx.ineqs[i].a[0] * x;
                descend(ctx, 1, point, fixed, meter, part);
            }
            return part;
        }));
    }
    std::exception_ptr err;
    for (auto& f : futs) {
        try {
            std::vector<IntVec> part = f.get();
            out.insert(out.end(), part.begin(), part.end());
        } catch (...) {
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    meter.finish();
    return out;
}

namespace {

// Core fundamental-domain walk for a nonsingular integer matrix W whose
// columns generate the sublattice: emits one representative per coset of
// Z^n / W Z^n, reduced into W * [0,1)^n. Stops early if the callback returns
// false.
template <typename F>
void walk_fundamental_domain(const IntMat& W, Budget& budget, F&& emit) {
    std::size_t n = W.rows;
    if (n == 0) { // zero-dimensional lattice: single point
        budget.charge_point();
        emit(IntVec{});
        return;
    }
    Int dvol = abs_int(det(W));
    if (dvol == 0) throw BadParameters("fundamental domain of a singular matrix");

    SnfResult s = snf(W);
    auto uinv_r = inverse(s.U);
    auto winv = inverse(W);
    if (!uinv_r || !winv) throw ConsistencyViolation("singular transform in snf");
    IntMat uinv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (den(uinv_r->at(i, j)) != 1)
                throw ConsistencyViolation("non-integer inverse of unimodular matrix");
            uinv.at(i, j) = num(uinv_r->at(i, j));
        }

    std::vector<Int> radix(n);
    for (std::size_t i = 0; i < n; ++i) radix[i] = s.D.at(i, i);

    std::vector<Int> t(n, Int(0));
    while (true) {
        budget.charge_point();
        // coset representative, then reduce into the half-open box
        IntVec r = mat_vec(uinv, IntVec(t.begin(), t.end()));
        RatVec rho(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rho[i] += winv->at(i, j) * Rat(r[j]);
        IntVec fl(n);
        for (std::size_t i = 0; i < n; ++i) fl[i] = floor_rat(rho[i]);
        IntVec p = r;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p[i] -= W.at(i, j) * fl[j];
        if (!emit(std::move(p))) return;

        std::size_t carry = 0;
        while (carry < n) {
            ++t[carry];
            if (t[carry] < radix[carry]) break;
            t[carry] = 0;
            ++carry;
        }
        if (carry == n) break;
    }
}

IntMat lifted_vertex_matrix(const Polytope& S) {
    if (!S.is_simplex()) throw NotASimplex("operation requires a simplex");
    std::size_t d = S.dim();
    IntMat W(d + 1, d + 1);
    const auto& cv = S.chart_vertices();
    for (std::size_t c = 0; c < cv.size(); ++c) {
        for (std::size_t i = 0; i < d; ++i) W.at(i, c) = cv[c][i];
        W.at(d, c) = 1;
    }
    return W;
}

} // namespace

std::vector<IntVec> fundamental_domain_points(const IntMat& B, Budget& budget) {
    if (B.rows != B.cols) throw DimensionMismatch("fundamental domain needs a square matrix");
    std::vector<IntVec> out;
    walk_fundamental_domain(B, budget, [&](IntVec p) {
        out.push_back(std::move(p));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GradedPoint> parallelepiped_points(const Polytope& S, Budget& budget) {
    if (!S.is_simplex()) throw NotASimplex("operation requires a simplex");
    return parallelepiped_points(S.chart_vertices(), budget);
}

std::vector<GradedPoint> parallelepiped_points(const std::vector<IntVec>& chart_vertices,
                                               Budget& budget) {
    if (chart_vertices.empty()) throw EmptyInput("simplex has no vertices");
    std::size_t d = chart_vertices.size() - 1;
    IntMat W(d + 1, d + 1);
    for (std::size_t c = 0; c <= d; ++c) {
        if (chart_vertices[c].size() != d) throw NotASimplex("vertex count does not match dimension");
        for (std::size_t i = 0; i < d; ++i) W.at(i, c) = chart_vertices[c][i];
        W.at(d, c) = 1;
    }
    std::vector<GradedPoint> out;
    walk_fundamental_domain(W, budget, [&](IntVec p) {
        GradedPoint g;
        g.degree = p[d];
        p.pop_back();
        g.x = std::move(p);
        out.push_back(std::move(g));
        return true;
    });
    std::sort(out.begin(), out.end());
    // sanity: exactly one point per coset, degrees within [0, d]
    if (Int(out.size()) != abs_int(det(W)))
        throw ConsistencyViolation("parallelepiped point count != volume");
    for (const GradedPoint& g : out)
        if (g.degree < 0 || g.degree > Int(d))
            throw ConsistencyViolation("parallelepiped degree out of range");
    return out;
}

bool is_empty_simplex(const Polytope& S, Budget& budget) {
    IntMat W = lifted_vertex_matrix(S);
    if (abs_int(det(W)) == 1) return true; // unimodular, vertices only
    bool empty = true;
    walk_fundamental_domain(W, budget, [&](IntVec p) {
        if (p[S.dim()] == 1) {
            empty = false;
            return false;
        }
        return true;
    });
    return empty;
}

std::vector<std::vector<IntVec>> empty_simplices(const Polytope& P, Budget& budget) {
    std::size_t d = P.dim();
    std::vector<IntVec> pts = lattice_points(P, 1, budget);
    std::size_t m = pts.size();

    std::vector<std::vector<IntVec>> found;
    std::vector<std::size_t> idx(d + 1);
    for (std::size_t i = 0; i <= d; ++i) idx[i] = i;

    if (m < d + 1) throw ConsistencyViolation("fewer lattice points than simplex vertices");

    while (true) {
        budget.charge_subset();
        IntMat W(d + 1, d + 1);
        for (std::size_t c = 0; c <= d; ++c) {
            for (std::size_t i = 0; i < d; ++i) W.at(i, c) = pts[idx[c]][i];
            W.at(d, c) = 1;
        }
        Int dt = det(W);
        if (dt != 0) {
            bool empty;
            if (abs_int(dt) == 1) {
                empty = true;
            } else {
                empty = true;
                walk_fundamental_domain(W, budget, [&](IntVec p) {
                    if (p[d] == 1) {
                        empty = false;
                        return false;
                    }
                    return true;
                });
            }
            if (empty) {
                std::vector<IntVec> cell;
                for (std::size_t c = 0; c <= d; ++c) cell.push_back(pts[idx[c]]);
                found.push_back(std::move(cell));
            }
        }
        // next lex combination
        std::size_t i = d + 1;
        while (i-- > 0) {
            if (idx[i] != i + m - (d + 1)) {
                ++idx[i];
                for (std::size_t j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return found;
        }
    }
}

} // namespace mupoly
