#include "mupoly/semigroup.hpp"

#include "mupoly/errors.hpp"
#include "mupoly/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace mupoly {

namespace {

// Ascending-degree irreducibility filter. Candidates must be sorted by
// (degree, lex); an element is kept iff subtracting no lower-degree accepted
// element lands back in the cone. Same-degree pairs never reduce (the
// difference would be a nonzero degree-0 point).
std::vector<GradedPoint> filter_irreducible(const Polytope& P,
                                            const std::vector<GradedPoint>& candidates) {
    std::vector<GradedPoint> basis;
    std::size_t lower = 0; // accepted entries of strictly smaller degree
    Int current_degree = -1;
    std::size_t hint = 0;
    for (const GradedPoint& c : candidates) {
        if (c.degree != current_degree) {
            current_degree = c.degree;
            lower = basis.size();
            hint = 0;
        }
        bool reducible = false;
        for (std::size_t t = 0; t < lower; ++t) {
            std::size_t i = (hint + t) % lower;
            if (P.chart_contains_dilated(vec_sub(c.x, basis[i].x), c.degree - basis[i].degree)) {
                reducible = true;
                hint = i;
                break;
            }
        }
        if (!reducible) basis.push_back(c);
    }
    return basis;
}

} // namespace

std::vector<GradedPoint> hilbert_basis_graded(const Polytope& P, Budget& budget, int threads) {
    std::size_t d = P.dim();
    int degree_cap = std::max<int>(1, (int)d - 1);

    std::vector<GradedPoint> candidates;
    bool confined = false;
    if (P.is_simplex()) {
        std::vector<GradedPoint> box = parallelepiped_points(P, budget);
        bool empty_simplex = std::none_of(box.begin(), box.end(),
                                          [](const GradedPoint& g) { return g.degree == 1; });
        if (empty_simplex) {
            // Empty simplex: every irreducible element of degree >= 2 lies in
            // the fundamental parallelepiped, so vertices + box points exhaust
            // the candidates without any dilation sweeps.
            confined = true;
            for (const IntVec& v : P.chart_vertices()) candidates.push_back({v, 1});
            for (GradedPoint& g : box)
                if (g.degree != 0) candidates.push_back(std::move(g));
            std::sort(candidates.begin(), candidates.end());
        }
    }
    if (!confined) {
        for (int n = 1; n <= degree_cap; ++n)
            for (IntVec& x : lattice_points(P, n, budget, threads))
                candidates.push_back({std::move(x), n});
    }

    std::vector<GradedPoint> basis = filter_irreducible(P, candidates);

    // Post-pass: degree bound and pairwise minimality.
    for (const GradedPoint& h : basis)
        if (h.degree > degree_cap)
            throw ConsistencyViolation("basis degree exceeds the dimension bound");
    for (const GradedPoint& h : basis)
        for (const GradedPoint& g : basis) {
            Int dd = h.degree - g.degree;
            if (dd > 0 && P.chart_contains_dilated(vec_sub(h.x, g.x), dd))
                throw ConsistencyViolation("reducible element survived the basis filter");
        }
    return basis;
}

int mu_hilb_from_basis(const std::vector<GradedPoint>& basis) {
    Int m = 1;
    for (const GradedPoint& h : basis) m = std::max(m, h.degree);
    return (int)m;
}

int mu_hilb(const Polytope& P, Budget& budget, int threads) {
    return mu_hilb_from_basis(hilbert_basis_graded(P, budget, threads));
}

namespace {

std::vector<std::size_t> greedy_independent_seed(const std::vector<IntVec>& gens, std::size_t n) {
    std::vector<std::size_t> seed;
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < gens.size() && seed.size() < n; ++i) {
        rows.push_back(gens[i]);
        if (rank(IntMat::from_rows(rows)) == rows.size())
            seed.push_back(i);
        else
            rows.pop_back();
    }
    if (seed.size() != n) throw ConsistencyViolation("generators lost rank during seeding");
    return seed;
}

// Primitive normal of the hyperplane through n-1 independent rays, oriented
// so the simplex's remaining ray sits on the negative side.
IntVec oriented_facet_normal(const std::vector<IntVec>& gens, const std::vector<std::size_t>& facet,
                             std::size_t opposite) {
    std::vector<IntVec> rows;
    for (std::size_t i : facet) rows.push_back(gens[i]);
    std::vector<IntVec> ker = integer_kernel_basis_rational(IntMat::from_rows(rows));
    if (ker.size() != 1) throw ConsistencyViolation("facet span is not a hyperplane");
    IntVec u = ker[0];
    Int side = dot(u, gens[opposite]);
    if (side == 0) throw ConsistencyViolation("degenerate simplex in triangulation");
    if (side > 0)
        for (Int& c : u) c = -c;
    return u;
}

// Placing triangulation of a full-dimensional pointed cone: returns index
// sets of simplicial subcones covering cone(gens).
std::vector<std::vector<std::size_t>> place_triangulation(const std::vector<IntVec>& gens,
                                                          std::size_t n, Budget& budget) {
    std::vector<std::size_t> seed = greedy_independent_seed(gens, n);
    std::vector<std::vector<std::size_t>> simplices{seed};
    std::set<std::size_t> seeded(seed.begin(), seed.end());

    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (seeded.count(g)) continue;
        // boundary facets = facets owned by exactly one simplex so far
        std::map<std::vector<std::size_t>, std::vector<std::size_t>> owners; // facet -> opposite rays
        for (const auto& s : simplices)
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<std::size_t> f = s;
                f.erase(f.begin() + drop);
                owners[f].push_back(s[drop]);
                budget.charge_subset();
            }
        std::vector<std::vector<std::size_t>> fresh;
        for (const auto& [facet, opp] : owners) {
            if (opp.size() != 1) continue;
            IntVec u = oriented_facet_normal(gens, facet, opp[0]);
            if (dot(u, gens[g]) > 0) {
                std::vector<std::size_t> s = facet;
                s.insert(std::lower_bound(s.begin(), s.end(), g), g);
                fresh.push_back(std::move(s));
            }
        }
        simplices.insert(simplices.end(), fresh.begin(), fresh.end());
    }

    // pseudo-manifold sanity: every facet belongs to one or two simplices
    std::map<std::vector<std::size_t>, int> counts;
    for (const auto& s : simplices)
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> f = s;
            f.erase(f.begin() + drop);
            ++counts[f];
        }
    for (const auto& [f, c] : counts)
        if (c > 2) throw ConsistencyViolation("triangulation facet shared by more than two cells");
    return simplices;
}

} // namespace

std::vector<IntVec> hilbert_basis_pointed(const std::vector<IntVec>& generators, Budget& budget) {
    if (generators.empty()) return {};
    std::size_t n = generators[0].size();
    std::vector<IntVec> gens;
    for (const IntVec& g : generators) {
        if (g.size() != n) throw DimensionMismatch("generators of mixed lengths");
        if (!is_zero_vec(g)) gens.push_back(make_primitive(g));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) return {};

    // Lower-dimensional span: switch to the saturated lattice of the span so
    // that cone points in Z^n correspond exactly to chart points in Z^r.
    std::size_t r = rank(IntMat::from_rows(gens));
    if (r < n) {
        std::vector<IntVec> sat = saturated_lattice_basis(gens, n);
        IntMat bt = IntMat::from_rows(sat).transposed(); // n x r
        std::vector<IntVec> reduced;
        for (const IntVec& g : gens) {
            auto sol = solve_rational(bt, g);
            if (!sol) throw ConsistencyViolation("generator escapes its own span");
            IntVec y(r);
            for (std::size_t i = 0; i < r; ++i) {
                if (den(sol->x[i]) != 1)
                    throw ConsistencyViolation("saturated chart gave a fractional coordinate");
                y[i] = num(sol->x[i]);
            }
            reduced.push_back(std::move(y));
        }
        std::vector<IntVec> out;
        for (const IntVec& h : hilbert_basis_pointed(reduced, budget))
            out.push_back(mat_vec(bt, h));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<DualRay> dual = dual_extreme_rays(gens, n);
    std::vector<IntVec> normals;
    for (const DualRay& ray : dual) normals.push_back(ray.y);
    if (normals.empty() || rank(IntMat::from_rows(normals)) < n)
        throw NotPointed("generator cone contains a line");
    auto in_cone = [&](const IntVec& x) {
        for (const IntVec& u : normals)
            if (dot(u, x) < 0) return false;
        return true;
    };

    // Candidates: the generators plus each simplicial subcone's parallelepiped.
    std::set<IntVec> candidates(gens.begin(), gens.end());
    for (const auto& s : place_triangulation(gens, n, budget)) {
        IntMat W(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t i = 0; i < n; ++i) W.at(i, c) = gens[s[c]][i];
        for (IntVec& p : fundamental_domain_points(W, budget))
            if (!is_zero_vec(p)) candidates.insert(std::move(p));
    }

    // One irreducibility pass against the whole candidate pool. The pool
    // generates the cone's lattice points, so x is reducible exactly when
    // some other candidate subtracts off without leaving the cone.
    std::vector<IntVec> pool(candidates.begin(), candidates.end());
    std::vector<IntVec> basis;
    for (const IntVec& x : pool) {
        bool reducible = false;
        for (const IntVec& y : pool) {
            if (y == x) continue;
            budget.charge_subset();
            if (in_cone(vec_sub(x, y))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    return basis;
}

Decomposer::Decomposer(const Polytope& P, Budget& budget)
    : poly_(P), budget_(budget), degree_one_(lattice_points(P, 1, budget)) {}

bool Decomposer::is_decomposable(const GradedPoint& p) {
    if (p.degree < 0) return false;
    if (p.degree == 0) return is_zero_vec(p.x);
    if (!poly_.chart_contains_dilated(p.x, p.degree)) return false;
    if (p.degree == 1) return true; // an integral point of P is its own sum
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    budget_.charge_point();
    bool ok = false;
    std::size_t m = degree_one_.size();
    for (std::size_t t = 0; t < m && !ok; ++t) {
        std::size_t i = (hint_ + t) % m;
        GradedPoint rest{vec_sub(p.x, degree_one_[i]), p.degree - 1};
        if (is_decomposable(rest)) {
            ok = true;
            hint_ = i;
        }
    }
    memo_.emplace(p, ok);
    return ok;
}

bool is_decomposable(const GradedPoint& p, const Polytope& P, Budget& budget) {
    Decomposer dec(P, budget);
    return dec.is_decomposable(p);
}

std::vector<Hole> box_points(const Polytope& P, Budget& budget) {
    std::size_t d = P.dim();
    std::vector<std::vector<IntVec>> cells = empty_simplices(P, budget);
    Decomposer dec(P, budget);
    std::map<GradedPoint, std::vector<IntVec>> holes;
    for (const auto& cell : cells)
        for (const GradedPoint& g : parallelepiped_points(cell, budget)) {
            if (g.degree == 0 || holes.count(g)) continue;
            if (!dec.is_decomposable(g)) holes.emplace(g, cell);
        }
    std::vector<Hole> out;
    for (auto& [g, cell] : holes) {
        if (g.degree < 2 || g.degree + 1 > Int(d))
            throw ConsistencyViolation("hole degree outside [2, d-1]");
        out.push_back({g, std::move(cell)});
    }
    return out;
}

int mu_hole_from_holes(const std::vector<Hole>& holes) {
    Int m = 1;
    for (const Hole& h : holes) m = std::max(m, h.point.degree);
    return (int)m;
}

int mu_hole(const Polytope& P, Budget& budget) {
    return mu_hole_from_holes(box_points(P, budget));
}

} // namespace mupoly
