#include "mupoly/semigroup.hpp"

#include "mupoly/linalg.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

using namespace mupoly;

namespace {

Polytope make(const std::vector<std::vector<int>>& pts) {
    std::vector<IntVec> v;
    for (const auto& p : pts) v.emplace_back(p.begin(), p.end());
    return Polytope::from_points(v);
}

IntVec vec(const std::vector<int>& v) { return IntVec(v.begin(), v.end()); }

GradedPoint gp(const std::vector<int>& x, int n) { return {vec(x), Int(n)}; }

// Independent check that a basis generates: bounded search for a nonnegative
// integer combination reaching the target.
bool combo_of(const std::vector<GradedPoint>& basis, const Polytope& P, const GradedPoint& target) {
    if (target.degree == 0) return is_zero_vec(target.x);
    for (const GradedPoint& h : basis) {
        if (h.degree > target.degree) continue;
        GradedPoint rest{vec_sub(target.x, h.x), target.degree - h.degree};
        if (rest.degree == 0) {
            if (is_zero_vec(rest.x)) return true;
            continue;
        }
        if (!P.chart_contains_dilated(rest.x, rest.degree)) continue;
        if (combo_of(basis, P, rest)) return true;
    }
    return false;
}

// Brute-force Hilbert basis for cones inside the positive orthant: every
// summand of a box-bounded point is itself box-bounded, so irreducibility is
// decidable within the grid.
std::vector<IntVec> brute_hb_orthant(const std::vector<IntVec>& gens, int side) {
    std::size_t n = gens[0].size();
    std::vector<IntVec> normals;
    for (const DualRay& r : dual_extreme_rays(gens, n)) normals.push_back(r.y);
    auto in_cone = [&](const IntVec& x) {
        for (const IntVec& u : normals)
            if (dot(u, x) < 0) return false;
        return true;
    };
    std::vector<IntVec> pts;
    std::vector<int> c(n, 0);
    while (true) {
        IntVec x(c.begin(), c.end());
        if (!is_zero_vec(x) && in_cone(x)) pts.push_back(x);
        std::size_t i = 0;
        while (i < n && ++c[i] > side) c[i++] = 0;
        if (i == n) break;
    }
    std::vector<IntVec> irr;
    for (const IntVec& x : pts) {
        bool red = false;
        for (const IntVec& y : pts)
            if (y != x && in_cone(vec_sub(x, y))) {
                red = true;
                break;
            }
        if (!red) irr.push_back(x);
    }
    std::sort(irr.begin(), irr.end());
    return irr;
}

} // namespace

TEST_CASE("graded Hilbert basis of unimodular simplices is the vertex set") {
    Polytope P = make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    Budget b;
    auto hb = hilbert_basis_graded(P, b);
    REQUIRE(hb.size() == 4);
    for (const GradedPoint& h : hb) CHECK(h.degree == 1);
    CHECK(mu_hilb_from_basis(hb) == 1);
}

TEST_CASE("graded Hilbert basis of a tail-2 simplex") {
    Polytope P = make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
    Budget b;
    auto hb = hilbert_basis_graded(P, b);
    REQUIRE(hb.size() == 5);
    CHECK(hb[4] == gp({1, 1, 1}, 2));
    CHECK(mu_hilb(P, b) == 2);
}

TEST_CASE("graded Hilbert basis of a tail-3 four-dimensional simplex") {
    Polytope P = make({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 3}});
    Budget b;
    auto hb = hilbert_basis_graded(P, b);
    std::vector<GradedPoint> high(hb.begin() + 5, hb.end());
    REQUIRE(hb.size() == 7);
    CHECK(high[0] == gp({1, 1, 1, 2}, 2));
    CHECK(high[1] == gp({1, 1, 1, 1}, 3));
    CHECK(mu_hilb_from_basis(hb) == 3);
}

TEST_CASE("graded Hilbert basis with one deep generator in dimension five") {
    // conv{0, e1..e4, (2,2,2,2,3)}: a single extra element ((1,...,1), 2).
    Polytope P = make({{0, 0, 0, 0, 0},
                       {1, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0},
                       {0, 0, 1, 0, 0},
                       {0, 0, 0, 1, 0},
                       {2, 2, 2, 2, 3}});
    Budget b;
    auto hb = hilbert_basis_graded(P, b);
    REQUIRE(hb.size() == 7);
    CHECK(hb[6] == gp({1, 1, 1, 1, 1}, 2));
    CHECK(mu_hilb_from_basis(hb) == 2);
}

TEST_CASE("graded Hilbert basis of the unit cube stays in degree one") {
    Polytope P = make({{0, 0, 0},
                       {1, 0, 0},
                       {0, 1, 0},
                       {0, 0, 1},
                       {1, 1, 0},
                       {1, 0, 1},
                       {0, 1, 1},
                       {1, 1, 1}});
    Budget b;
    auto hb = hilbert_basis_graded(P, b);
    CHECK(hb.size() == 8);
    CHECK(mu_hilb_from_basis(hb) == 1);
}

TEST_CASE("graded Hilbert basis picks up holes of non-empty simplices") {
    Polytope P = make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {4, 4, 5}});
    Budget b;
    auto hb = hilbert_basis_graded(P, b);
    bool found = false;
    for (const GradedPoint& h : hb) found = found || h == gp({3, 3, 3}, 2);
    CHECK(found);
    CHECK(mu_hilb_from_basis(hb) == 2);
}

TEST_CASE("graded Hilbert basis generates all low dilations") {
    std::vector<Polytope> cases;
    cases.push_back(make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}));
    cases.push_back(make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {4, 4, 5}}));
    cases.push_back(make({{0, 0}, {2, 1}, {1, 3}}));
    for (const Polytope& P : cases) {
        Budget b;
        auto hb = hilbert_basis_graded(P, b);
        for (int n = 1; n <= 4; ++n)
            for (const IntVec& x : lattice_points(P, n, b)) CHECK(combo_of(hb, P, {x, n}));
    }
}

TEST_CASE("graded Hilbert basis respects the point budget") {
    Polytope P = make({{0, 0, 0}, {20, 0, 0}, {0, 20, 0}, {0, 0, 20}, {20, 20, 20}});
    Budget b;
    b.point_cap = 40;
    CHECK_THROWS_AS(hilbert_basis_graded(P, b), BudgetExceeded);
}

TEST_CASE("pointed Hilbert basis of simplicial cones") {
    Budget b;
    CHECK(hilbert_basis_pointed({vec({1, 0}), vec({0, 1})}, b) ==
          std::vector<IntVec>{vec({0, 1}), vec({1, 0})});
    CHECK(hilbert_basis_pointed({vec({1, 0}), vec({1, 2})}, b) ==
          std::vector<IntVec>{vec({1, 0}), vec({1, 1}), vec({1, 2})});
    // redundant and non-primitive generators change nothing
    CHECK(hilbert_basis_pointed({vec({2, 0}), vec({1, 1}), vec({0, 3})}, b) ==
          std::vector<IntVec>{vec({0, 1}), vec({1, 0})});
}

TEST_CASE("pointed Hilbert basis matches brute force on orthant cones") {
    Budget b;
    std::vector<std::vector<IntVec>> cones = {
        {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 2})},
        {vec({1, 0}), vec({3, 4})},
        {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 3}), vec({0, 1, 2})},
    };
    for (const auto& gens : cones) {
        auto hb = hilbert_basis_pointed(gens, b);
        CHECK(hb == brute_hb_orthant(gens, 4));
    }
}

TEST_CASE("pointed Hilbert basis of lower-dimensional cones") {
    Budget b;
    CHECK(hilbert_basis_pointed({vec({1, 1, 1})}, b) == std::vector<IntVec>{vec({1, 1, 1})});
    CHECK(hilbert_basis_pointed({vec({2, 2, 0}), vec({0, 2, 2})}, b) ==
          std::vector<IntVec>{vec({0, 1, 1}), vec({1, 1, 0})});
    CHECK(hilbert_basis_pointed({vec({1, -1, 0}), vec({1, 1, 0})}, b) ==
          std::vector<IntVec>{vec({1, -1, 0}), vec({1, 0, 0}), vec({1, 1, 0})});
}

TEST_CASE("pointed Hilbert basis rejects cones with lines") {
    Budget b;
    CHECK_THROWS_AS(hilbert_basis_pointed({vec({1, 0}), vec({-1, 0}), vec({0, 1})}, b),
                    NotPointed);
    CHECK_THROWS_AS(hilbert_basis_pointed({vec({1}), vec({-1})}, b), NotPointed);
}

TEST_CASE("pointed Hilbert basis of empty input") {
    Budget b;
    CHECK(hilbert_basis_pointed({}, b).empty());
    CHECK(hilbert_basis_pointed({vec({0, 0})}, b).empty());
}

TEST_CASE("box points of normal polytopes are empty") {
    Budget b;
    Polytope simplex = make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(box_points(simplex, b).empty());
    CHECK(mu_hole(simplex, b) == 1);

    Polytope cube = make({{0, 0, 0},
                          {1, 0, 0},
                          {0, 1, 0},
                          {0, 0, 1},
                          {1, 1, 0},
                          {1, 0, 1},
                          {0, 1, 1},
                          {1, 1, 1}});
    CHECK(box_points(cube, b).empty());
    CHECK(mu_hole(cube, b) == 1);
}

TEST_CASE("box points of a seven-dimensional simplex with a deep tail") {
    // conv{0, e1..e6, (3,...,3,4)}: holes ((j,...,j), 2j) for j = 1,2,3.
    std::vector<std::vector<int>> verts(1, std::vector<int>(7, 0));
    for (int i = 0; i < 6; ++i) {
        std::vector<int> e(7, 0);
        e[i] = 1;
        verts.push_back(e);
    }
    verts.push_back({3, 3, 3, 3, 3, 3, 4});
    Polytope P = make(verts);
    Budget b;
    auto holes = box_points(P, b);
    REQUIRE(holes.size() == 3);
    for (int j = 1; j <= 3; ++j) {
        CHECK(holes[j - 1].point == gp({j, j, j, j, j, j, j}, 2 * j));
        CHECK(holes[j - 1].witness_simplex == P.chart_vertices());
    }
    CHECK(mu_hole_from_holes(holes) == 6);

    // the basis sits inside the holes plus the degree-1 layer
    auto hb = hilbert_basis_graded(P, b);
    for (const GradedPoint& h : hb) {
        if (h.degree == 1) continue;
        bool listed = false;
        for (const Hole& hole : holes) listed = listed || hole.point == h;
        CHECK(listed);
    }
    CHECK(mu_hilb_from_basis(hb) <= mu_hole_from_holes(holes));
}

TEST_CASE("box points of a non-empty simplex come from inner empty cells") {
    Polytope P = make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {4, 4, 5}});
    Budget b;
    auto holes = box_points(P, b);
    REQUIRE(holes.size() == 1);
    CHECK(holes[0].point == gp({3, 3, 3}, 2));
    CHECK(mu_hole(P, b) == 2);

    // witness validity: the hole lies in its witness parallelepiped
    auto par = parallelepiped_points(holes[0].witness_simplex, b);
    CHECK(std::count(par.begin(), par.end(), holes[0].point) == 1);
}

TEST_CASE("box points respect the subset budget") {
    Polytope P = make({{0, 0, 0},
                       {1, 0, 0},
                       {0, 1, 0},
                       {0, 0, 1},
                       {1, 1, 0},
                       {1, 0, 1},
                       {0, 1, 1},
                       {1, 1, 1}});
    Budget b;
    b.subset_cap = 5;
    CHECK_THROWS_AS(box_points(P, b), BudgetExceeded);
}

TEST_CASE("decomposability of graded points") {
    Polytope P = make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    Budget b;
    CHECK(is_decomposable({IntVec(3, Int(0)), 0}, P, b));
    for (int n = 1; n <= 4; ++n)
        for (const IntVec& x : lattice_points(P, n, b)) CHECK(is_decomposable({x, n}, P, b));
    CHECK_FALSE(is_decomposable({vec({0, 0, 2}), 1}, P, b));

    Polytope Q = make({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {4, 4, 5}});
    CHECK_FALSE(is_decomposable(gp({3, 3, 3}, 2), Q, b));
    CHECK(is_decomposable(gp({1, 1, 1}, 2), Q, b));
}

TEST_CASE("decomposability of the deep-tail hole") {
    std::vector<std::vector<int>> verts(1, std::vector<int>(7, 0));
    for (int i = 0; i < 6; ++i) {
        std::vector<int> e(7, 0);
        e[i] = 1;
        verts.push_back(e);
    }
    verts.push_back({3, 3, 3, 3, 3, 3, 4});
    Polytope P = make(verts);
    Budget b;
    CHECK_FALSE(is_decomposable(gp({1, 1, 1, 1, 1, 1, 1}, 2), P, b));
    CHECK_FALSE(is_decomposable(gp({1, 1, 1, 1, 1, 1, 1}, 3), P, b));
    CHECK(is_decomposable(gp({1, 1, 0, 0, 0, 0, 0}, 2), P, b));
    CHECK(is_decomposable(gp({3, 3, 3, 3, 3, 3, 4}, 3), P, b));
}
