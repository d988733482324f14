#include "mupoly/enumerate.hpp"

#include "mupoly/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace mupoly;

namespace {

IntVec iv(std::vector<long long> v) {
    IntVec r;
    for (long long x : v) r.push_back(Int(x));
    return r;
}

std::vector<IntVec> pts(std::vector<std::vector<long long>> v) {
    std::vector<IntVec> r;
    for (auto& p : v) r.push_back(iv(p));
    return r;
}

// Independent oracle: walk the ambient bounding box of k*P and keep the
// points whose rational division by k lies in P.
std::set<IntVec> brute_force_dilation_points(const Polytope& P, long long k) {
    std::size_t n = P.ambient_dim();
    IntVec lo(n), hi(n);
    bool first = true;
    for (const IntVec& v : P.vertices()) {
        for (std::size_t i = 0; i < n; ++i) {
            Int s = v[i] * k;
            if (first || s < lo[i]) lo[i] = s;
            if (first || s > hi[i]) hi[i] = s;
        }
        first = false;
    }
    std::set<IntVec> out;
    IntVec cur = lo;
    while (true) {
        RatVec q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = Rat(cur[i], k);
        if (P.contains(q)) out.insert(cur);
        std::size_t i = 0;
        while (i < n) {
            ++cur[i];
            if (cur[i] <= hi[i]) break;
            cur[i] = lo[i];
            ++i;
        }
        if (i == n) break;
        if (n == 0) break;
    }
    if (n == 0) out.insert(IntVec{});
    return out;
}

void check_against_oracle(const Polytope& P, long long k) {
    Budget b;
    auto got = lattice_points(P, k, b);
    // sorted and deduplicated
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    std::set<IntVec> ambient;
    for (const IntVec& y : got) ambient.insert(P.chart_to_ambient_dilated(y, k));
    CHECK(ambient.size() == got.size());
    CHECK(ambient == brute_force_dilation_points(P, k));
}

} // namespace

TEST_CASE("lattice_points matches ambient brute force") {
    SUBCASE("standard triangle") {
        auto P = Polytope::from_points(pts({{0, 0}, {1, 0}, {0, 1}}));
        for (long long k = 1; k <= 5; ++k) check_against_oracle(P, k);
        Budget b;
        CHECK(lattice_points(P, 2, b).size() == 6);
    }
    SUBCASE("square with negative corner") {
        auto P = Polytope::from_points(pts({{-1, -1}, {2, -1}, {-1, 2}, {2, 2}}));
        for (long long k = 1; k <= 3; ++k) check_against_oracle(P, k);
    }
    SUBCASE("tetrahedron with tail 2") {
        auto P = Polytope::from_points(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}));
        for (long long k = 1; k <= 4; ++k) check_against_oracle(P, k);
    }
    SUBCASE("lower-dimensional: diagonal segment and plane triangle") {
        auto S = Polytope::from_points(pts({{0, 0}, {2, 2}}));
        for (long long k = 1; k <= 4; ++k) check_against_oracle(S, k);
        Budget b;
        CHECK(lattice_points(S, 3, b).size() == 7); // chart [0, 6]

        auto T = Polytope::from_points(pts({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
        for (long long k = 1; k <= 2; ++k) check_against_oracle(T, k);
    }
    SUBCASE("point polytope") {
        auto P = Polytope::from_points(pts({{7, -3}}));
        Budget b;
        auto got = lattice_points(P, 5, b);
        REQUIRE(got.size() == 1);
        CHECK(got[0] == IntVec{});
        CHECK(P.chart_to_ambient_dilated(got[0], 5) == iv({35, -15}));
    }
}

TEST_CASE("lattice_points parallel split is identical") {
    auto P = Polytope::from_points(pts({{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
    Budget b1, b4;
    auto seq = lattice_points(P, 4, b1, 1);
    auto par = lattice_points(P, 4, b4, 4);
    CHECK(seq == par);
    CHECK(b1.points_seen == b4.points_seen);
}

TEST_CASE("lattice_points budget") {
    auto P = Polytope::from_points(pts({{0, 0}, {20, 0}, {0, 20}, {20, 20}}));
    Budget b;
    b.point_cap = 100;
    CHECK_THROWS_AS(lattice_points(P, 5, b), BudgetExceeded);
}

TEST_CASE("parallelepiped_points") {
    SUBCASE("tail-2 simplex: origin plus one height-2 point") {
        auto S = Polytope::from_points(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}));
        Budget b;
        auto box = parallelepiped_points(S, b);
        REQUIRE(box.size() == 2);
        CHECK(box[0].x == iv({0, 0, 0}));
        CHECK(box[0].degree == 0);
        CHECK(box[1].x == iv({1, 1, 1}));
        CHECK(box[1].degree == 2);
    }
    SUBCASE("tail-3 simplex: two height-2 points") {
        auto S = Polytope::from_points(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}}));
        Budget b;
        auto box = parallelepiped_points(S, b);
        REQUIRE(box.size() == 3);
        CHECK(box[1].x == iv({1, 1, 1}));
        CHECK(box[1].degree == 2);
        CHECK(box[2].x == iv({1, 1, 2}));
        CHECK(box[2].degree == 2);
    }
    SUBCASE("unimodular simplex: origin only") {
        auto S = Polytope::from_points(pts({{0, 0}, {1, 0}, {0, 1}}));
        Budget b;
        auto box = parallelepiped_points(S, b);
        REQUIRE(box.size() == 1);
        CHECK(box[0].degree == 0);
    }
    SUBCASE("non-simplex throws") {
        auto P = Polytope::from_points(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
        Budget b;
        CHECK_THROWS_AS(parallelepiped_points(P, b), NotASimplex);
    }
}

TEST_CASE("fundamental_domain_points") {
    Budget b;
    IntMat B = IntMat::from_rows(pts({{2, 0}, {0, 3}})); // columns (2,0),(0,3)
    auto got = fundamental_domain_points(B, b);
    CHECK(got.size() == 6);
    for (long long x = 0; x < 2; ++x)
        for (long long y = 0; y < 3; ++y)
            CHECK(std::binary_search(got.begin(), got.end(), iv({x, y})));
}

TEST_CASE("is_empty_simplex") {
    Budget b;
    auto E = Polytope::from_points(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}}));
    CHECK(is_empty_simplex(E, b));
    // this one contains (1,1,1) strictly inside
    auto F = Polytope::from_points(pts({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {1, 1, 2}}));
    Budget b2;
    bool empty = is_empty_simplex(F, b2);
    Budget b3;
    CHECK(empty == (lattice_points(F, 1, b3).size() == 4));
    CHECK(!empty);
}

TEST_CASE("empty simplex iff exactly d+1 lattice points") {
    // randomized-ish cross-check over a small family of tetrahedra
    for (long long t1 = 1; t1 <= 4; ++t1)
        for (long long t2 = 1; t2 <= 3; ++t2) {
            auto S = Polytope::from_points(
                pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, t2, t1}}));
            if (!S.is_simplex()) continue;
            Budget b1, b2;
            CHECK(is_empty_simplex(S, b1) == (lattice_points(S, 1, b2).size() == 4));
        }
}

TEST_CASE("empty_simplices") {
    SUBCASE("unit square: the four corner triangles") {
        auto P = Polytope::from_points(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
        Budget b;
        auto cells = empty_simplices(P, b);
        CHECK(cells.size() == 4);
        for (const auto& cell : cells) CHECK(cell.size() == 3);
    }
    SUBCASE("unit cube: 58 empty tetrahedra, including the det-2 regular one") {
        std::vector<IntVec> cube;
        for (long long x = 0; x < 2; ++x)
            for (long long y = 0; y < 2; ++y)
                for (long long z = 0; z < 2; ++z) cube.push_back(iv({x, y, z}));
        auto P = Polytope::from_points(cube);
        Budget b;
        auto cells = empty_simplices(P, b);
        // 70 quadruples, 12 coplanar, every affinely independent one is empty
        CHECK(cells.size() == 58);
        std::vector<IntVec> regular = pts({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        std::sort(regular.begin(), regular.end());
        bool found = false;
        for (const auto& cell : cells)
            if (cell == regular) found = true;
        CHECK(found);
    }
    SUBCASE("subset budget") {
        std::vector<IntVec> cube;
        for (long long x = 0; x < 2; ++x)
            for (long long y = 0; y < 2; ++y)
                for (long long z = 0; z < 2; ++z) cube.push_back(iv({x, y, z}));
        auto P = Polytope::from_points(cube);
        Budget b;
        b.subset_cap = 10;
        CHECK_THROWS_AS(empty_simplices(P, b), BudgetExceeded);
    }
}

TEST_CASE("lattice_points parallel split is identical on non-simplices") {
    auto P = Polytope::from_points(pts({{0, 0}, {6, 0}, {0, 6}, {6, 6}}));
    Budget b1, b4;
    auto seq = lattice_points(P, 3, b1, 1);
    auto par = lattice_points(P, 3, b4, 4);
    CHECK(seq == par);
    CHECK(b1.points_seen == b4.points_seen);
    CHECK(seq.size() == 19 * 19);
}
