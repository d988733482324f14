#include "mupoly/polytope.hpp"

#include "mupoly/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace mupoly {

namespace {

RatMat mul_rat_int(const RatMat& A, const IntMat& B) {
    if (A.cols != B.rows) throw DimensionMismatch("mul_rat_int shape");
    RatMat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            if (A.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) += A.at(i, k) * Rat(B.at(k, j));
        }
    return C;
}

} // namespace

IntVec Chart::to_chart(const IntVec& ambient) const {
    if (ambient.size() != base.size()) throw DimensionMismatch("chart point size");
    RatVec diff(ambient.size());
    for (std::size_t i = 0; i < ambient.size(); ++i) diff[i] = Rat(ambient[i] - base[i]);
    RatVec y = mat_vec(left_inv, diff);
    // Verify the point really lies on the affine lattice and has integer
    // chart coordinates; anything else is a caller bug.
    IntVec yi(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (den(y[i]) != 1) throw ConsistencyViolation("non-integer chart coordinate");
        yi[i] = num(y[i]);
    }
    IntVec back = to_ambient(yi);
    if (back != ambient) throw ConsistencyViolation("point off the affine hull in to_chart");
    return yi;
}

std::optional<RatVec> Chart::to_chart_rat(const RatVec& ambient) const {
    if (ambient.size() != base.size()) throw DimensionMismatch("chart point size");
    RatVec diff(ambient.size());
    for (std::size_t i = 0; i < ambient.size(); ++i) diff[i] = ambient[i] - Rat(base[i]);
    RatVec y = mat_vec(left_inv, diff);
    // Membership in the affine hull: B y must reproduce the difference.
    for (std::size_t i = 0; i < base.size(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < basis_cols.cols; ++j) s += Rat(basis_cols.at(i, j)) * y[j];
        if (s != diff[i]) return std::nullopt;
    }
    return y;
}

IntVec Chart::to_ambient(const IntVec& chart_pt) const {
    if (chart_pt.size() != basis_cols.cols) throw DimensionMismatch("chart point size");
    IntVec x = base;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < chart_pt.size(); ++j)
            x[i] += basis_cols.at(i, j) * chart_pt[j];
    return x;
}

RatVec Chart::to_ambient_rat(const RatVec& chart_pt) const {
    if (chart_pt.size() != basis_cols.cols) throw DimensionMismatch("chart point size");
    RatVec x(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        x[i] = Rat(base[i]);
        for (std::size_t j = 0; j < chart_pt.size(); ++j)
            x[i] += Rat(basis_cols.at(i, j)) * chart_pt[j];
    }
    return x;
}

// ---------------------------------------------------------------------------
// Double description

namespace {

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= (std::uint64_t(1) << (i % 64)); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    static Bits intersect(const Bits& a, const Bits& b) {
        Bits r;
        r.w.resize(a.w.size());
        for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }
    // this subset-of other
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
};

struct WorkRay {
    IntVec y;
    Bits tight;
};

} // namespace

std::vector<DualRay> dual_extreme_rays(const std::vector<IntVec>& generators, std::size_t dim) {
    if (generators.empty()) throw EmptyInput("dual_extreme_rays: no generators");
    for (const IntVec& g : generators)
        if (g.size() != dim) throw DimensionMismatch("generator size");

    std::size_t m = generators.size();

    // Greedy maximal independent subset in input order; it seeds a simplicial
    // dual cone whose rays are the columns of the inverse.
    std::vector<std::size_t> basis_idx;
    {
        std::vector<IntVec> chosen;
        for (std::size_t i = 0; i < m && basis_idx.size() < dim; ++i) {
            chosen.push_back(generators[i]);
            if (rank(IntMat::from_rows(chosen)) == chosen.size())
                basis_idx.push_back(i);
            else
                chosen.pop_back();
        }
    }
    if (basis_idx.size() < dim)
        throw DimensionMismatch("generators do not span the space");

    // Process order: basis first, the rest in input order.
    std::vector<std::size_t> perm = basis_idx;
    {
        std::vector<bool> used(m, false);
        for (std::size_t i : basis_idx) used[i] = true;
        for (std::size_t i = 0; i < m; ++i)
            if (!used[i]) perm.push_back(i);
    }

    std::vector<IntVec> basis_rows;
    for (std::size_t i : basis_idx) basis_rows.push_back(generators[i]);
    auto inv = inverse(IntMat::from_rows(basis_rows));
    if (!inv) throw ConsistencyViolation("basis submatrix singular");

    std::vector<WorkRay> rays;
    for (std::size_t j = 0; j < dim; ++j) {
        RatVec cj(dim);
        for (std::size_t i = 0; i < dim; ++i) cj[i] = inv->at(i, j);
        Int lcm = 1;
        for (const Rat& q : cj) lcm = lcm / gcd_int(lcm, den(q)) * den(q);
        IntVec y(dim);
        for (std::size_t i = 0; i < dim; ++i) y[i] = num(cj[i]) * (lcm / den(cj[i]));
        y = make_primitive(std::move(y));
        WorkRay r{std::move(y), Bits(m)};
        for (std::size_t i = 0; i < dim; ++i)
            if (i != j) r.tight.set(i); // positions 0..dim-1 are the basis gens
        rays.push_back(std::move(r));
    }

    for (std::size_t t = dim; t < m; ++t) {
        const IntVec& g = generators[perm[t]];
        std::vector<Int> s(rays.size());
        std::vector<std::size_t> pos, neg, zer;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            s[r] = dot(g, rays[r].y);
            if (s[r] > 0) pos.push_back(r);
            else if (s[r] < 0) neg.push_back(r);
            else zer.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r : zer) rays[r].tight.set(t);
            continue;
        }
        std::vector<WorkRay> fresh;
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                Bits common = Bits::intersect(rays[p].tight, rays[n].tight);
                // Combinatorial adjacency (valid for pointed cones): no third
                // ray may be tight on every constraint both are tight on.
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (r == p || r == n) continue;
                    if (common.subset_of(rays[r].tight)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                IntVec y(g.size());
                for (std::size_t i = 0; i < y.size(); ++i)
                    y[i] = s[p] * rays[n].y[i] - s[n] * rays[p].y[i];
                y = make_primitive(std::move(y));
                WorkRay nr{std::move(y), Bits(m)};
                for (std::size_t q = 0; q <= t; ++q) {
                    Int v = dot(generators[perm[q]], nr.y);
                    if (v == 0) nr.tight.set(q);
                    else if (v < 0) throw ConsistencyViolation("new ray violates processed constraint");
                }
                fresh.push_back(std::move(nr));
            }
        }
        std::vector<WorkRay> next;
        for (std::size_t r : pos) next.push_back(std::move(rays[r]));
        for (std::size_t r : zer) {
            rays[r].tight.set(t);
            next.push_back(std::move(rays[r]));
        }
        for (WorkRay& r : fresh) next.push_back(std::move(r));
        rays = std::move(next);
    }

    std::vector<DualRay> out;
    for (WorkRay& r : rays) {
        DualRay d;
        d.y = std::move(r.y);
        for (std::size_t q = 0; q < m; ++q)
            if (r.tight.test(q)) d.tight.push_back(perm[q]);
        std::sort(d.tight.begin(), d.tight.end());
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const DualRay& a, const DualRay& b) { return a.y < b.y; });
    return out;
}

// ---------------------------------------------------------------------------
// Polytope

Polytope Polytope::from_points(const std::vector<IntVec>& pts_in) {
    if (pts_in.empty()) throw EmptyInput("polytope needs at least one point");
    std::size_t n = pts_in.front().size();
    for (const IntVec& p : pts_in)
        if (p.size() != n) throw DimensionMismatch("points of differing ambient dimension");

    std::vector<IntVec> pts = pts_in;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope P;
    P.ambient_dim_ = n;

    // Chart: base at the lex-min point (always extreme), direction lattice
    // saturated so chart coordinates of lattice points are integers.
    const IntVec& base = pts.front();
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], base));
    std::vector<IntVec> sat = saturated_lattice_basis(diffs, n);
    std::size_t d = sat.size();

    P.chart_.base = base;
    P.chart_.basis_cols = sat.empty() ? IntMat(n, 0) : IntMat::from_rows(sat).transposed();
    if (d == 0) {
        P.chart_.left_inv = RatMat(0, n);
    } else {
        IntMat B = P.chart_.basis_cols;
        IntMat BtB = mat_mul(B.transposed(), B);
        auto inv_btb = inverse(BtB);
        if (!inv_btb) throw ConsistencyViolation("degenerate chart basis");
        P.chart_.left_inv = mul_rat_int(*inv_btb, B.transposed());
    }

    std::vector<IntVec> chart_pts;
    for (const IntVec& p : pts) chart_pts.push_back(P.chart_.to_chart(p));

    if (d == 0) {
        P.vertices_ = {base};
        P.chart_vertices_ = {IntVec{}};
        P.chart_min_ = P.chart_max_ = IntVec{};
        return P;
    }

    // Facets from the dual of the cone over the lifted points.
    std::vector<IntVec> lifted;
    for (const IntVec& y : chart_pts) {
        IntVec g = y;
        g.push_back(1);
        lifted.push_back(std::move(g));
    }
    std::vector<DualRay> rays = dual_extreme_rays(lifted, d + 1);
    for (const DualRay& r : rays) {
        Facet f;
        f.a.assign(d, Int(0));
        for (std::size_t i = 0; i < d; ++i) f.a[i] = -r.y[i];
        f.b = r.y[d];
        P.hrep_.facets.push_back(std::move(f));
    }

    // A point is a vertex iff its tight facet normals span the space.
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<IntVec> tight_normals;
        for (const Facet& f : P.hrep_.facets)
            if (dot(f.a, chart_pts[i]) == f.b) tight_normals.push_back(f.a);
        if (tight_normals.size() >= d && rank(IntMat::from_rows(tight_normals)) == d) {
            P.vertices_.push_back(pts[i]);
            P.chart_vertices_.push_back(chart_pts[i]);
        }
    }
    if (P.vertices_.empty()) throw ConsistencyViolation("no vertices found");
    std::sort(P.chart_vertices_.begin(), P.chart_vertices_.end());

    P.chart_min_ = P.chart_max_ = P.chart_vertices_.front();
    for (const IntVec& y : P.chart_vertices_)
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j] < P.chart_min_[j]) P.chart_min_[j] = y[j];
            if (y[j] > P.chart_max_[j]) P.chart_max_[j] = y[j];
        }
    return P;
}

bool Polytope::contains(const RatVec& ambient_pt) const {
    auto y = chart_.to_chart_rat(ambient_pt);
    if (!y) return false;
    for (const Facet& f : hrep_.facets) {
        Rat s = 0;
        for (std::size_t j = 0; j < f.a.size(); ++j) s += Rat(f.a[j]) * (*y)[j];
        if (s > Rat(f.b)) return false;
    }
    return true;
}

bool Polytope::chart_contains_dilated(const IntVec& chart_pt, const Int& k) const {
    for (const Facet& f : hrep_.facets)
        if (dot(f.a, chart_pt) > k * f.b) return false;
    return true;
}

bool Polytope::chart_interior_dilated(const IntVec& chart_pt, const Int& k) const {
    for (const Facet& f : hrep_.facets)
        if (dot(f.a, chart_pt) >= k * f.b) return false;
    return true;
}

Polytope Polytope::dilate(const Int& k) const {
    if (k <= 0) throw BadParameters("dilation factor must be positive");
    // Scaling shares the chart direction lattice, so everything transfers:
    // vertices, chart vertices and facet offsets all scale by k.
    Polytope Q;
    Q.ambient_dim_ = ambient_dim_;
    for (const IntVec& v : vertices_) Q.vertices_.push_back(vec_scale(v, k));
    Q.chart_ = chart_;
    Q.chart_.base = vec_scale(chart_.base, k);
    for (const IntVec& y : chart_vertices_) Q.chart_vertices_.push_back(vec_scale(y, k));
    for (const Facet& f : hrep_.facets) Q.hrep_.facets.push_back({f.a, k * f.b});
    Q.chart_min_ = vec_scale(chart_min_, k);
    Q.chart_max_ = vec_scale(chart_max_, k);
    return Q;
}

IntVec Polytope::chart_to_ambient_dilated(const IntVec& chart_pt, const Int& k) const {
    if (chart_pt.size() != dim()) throw DimensionMismatch("chart point size");
    IntVec x = vec_scale(chart_.base, k);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < chart_pt.size(); ++j)
            x[i] += chart_.basis_cols.at(i, j) * chart_pt[j];
    return x;
}

Int Polytope::normalized_volume() const {
    std::size_t d = dim();
    if (d == 0) return 1;

    // Triangulation by coning the lex-min vertex over the facets it misses,
    // recursively; cells are returned as ambient vertex tuples.
    struct Rec {
        static void triangulate(const Polytope& Q, std::vector<std::vector<IntVec>>& cells) {
            if (Q.is_simplex()) {
                cells.push_back(Q.vertices());
                return;
            }
            const IntVec& v0 = Q.vertices().front();
            IntVec v0c = Q.chart().to_chart(v0);
            for (const Facet& f : Q.hrep().facets) {
                if (dot(f.a, v0c) == f.b) continue; // v0 on the facet: skip
                std::vector<IntVec> fverts;
                for (const IntVec& v : Q.vertices())
                    if (dot(f.a, Q.chart().to_chart(v)) == f.b) fverts.push_back(v);
                Polytope F = Polytope::from_points(fverts);
                std::vector<std::vector<IntVec>> sub;
                triangulate(F, sub);
                for (std::vector<IntVec>& cell : sub) {
                    cell.push_back(v0);
                    cells.push_back(std::move(cell));
                }
            }
        }
    };

    std::vector<std::vector<IntVec>> cells;
    Rec::triangulate(*this, cells);
    Int vol = 0;
    for (const std::vector<IntVec>& cell : cells) {
        IntMat lifted(d + 1, d + 1);
        for (std::size_t i = 0; i < cell.size(); ++i) {
            IntVec y = chart_.to_chart(cell[i]);
            for (std::size_t j = 0; j < d; ++j) lifted.at(i, j) = y[j];
            lifted.at(i, d) = 1;
        }
        vol += abs_int(det(lifted));
    }
    return vol;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw DimensionMismatch("minkowski_sum: ambient dimensions differ");
    std::vector<IntVec> sums;
    for (const IntVec& a : p.vertices())
        for (const IntVec& b : q.vertices()) sums.push_back(vec_add(a, b));
    return Polytope::from_points(sums);
}

GradedConeRep graded_cone(const Polytope& p) {
    GradedConeRep c;
    std::size_t d = p.dim();
    for (const IntVec& y : p.chart_vertices()) {
        IntVec g = y;
        g.push_back(1);
        c.generators.push_back(std::move(g));
    }
    if (d == 0) {
        c.facet_normals.push_back(IntVec{Int(1)}); // degree >= 0
        return c;
    }
    for (const Facet& f : p.hrep().facets) {
        IntVec nrm(d + 1);
        for (std::size_t j = 0; j < d; ++j) nrm[j] = -f.a[j];
        nrm[d] = f.b;
        c.facet_normals.push_back(std::move(nrm));
    }
    return c;
}

std::vector<IntVec> vertex_cone(const Polytope& p, const IntVec& chart_vertex) {
    const auto& cv = p.chart_vertices();
    if (!std::binary_search(cv.begin(), cv.end(), chart_vertex))
        throw NotAVertex("vertex_cone anchor is not a chart vertex");
    std::vector<IntVec> gens;
    for (const IntVec& w : cv)
        if (w != chart_vertex) gens.push_back(vec_sub(w, chart_vertex));
    std::sort(gens.begin(), gens.end());
    return gens;
}

} // namespace mupoly
