#include "doctest.h"

#include "mupoly/arith.hpp"
#include "mupoly/enumerate.hpp"
#include "mupoly/errors.hpp"
#include "mupoly/families.hpp"
#include "mupoly/profile.hpp"

#include <algorithm>

using namespace mupoly;

namespace {

IntVec vec(std::initializer_list<long long> xs) {
    IntVec v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

}  // namespace

TEST_CASE("berkeley emits the documented simplices") {
    Polytope p = berkeley(3, 2);
    std::vector<IntVec> want = {vec({0, 0, 0}), vec({0, 1, 0}), vec({1, 0, 0}), vec({1, 1, 2})};
    std::sort(want.begin(), want.end());
    CHECK(p.vertices() == want);

    Polytope q = berkeley(4, 3);
    CHECK(q.vertices().size() == 5);
    CHECK(q.dim() == 4);
    CHECK(q.normalized_volume() == 3);
    CHECK(std::find(q.vertices().begin(), q.vertices().end(), vec({1, 1, 1, 3})) !=
          q.vertices().end());
}

TEST_CASE("berkeley polytopes are empty simplices") {
    Budget b;
    for (auto [d, j] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}, {5, 3}, {6, 4}}) {
        Polytope p = berkeley(d, j);
        CHECK(p.is_simplex());
        CHECK(lattice_points(p, Int(1), b).size() == static_cast<std::size_t>(d) + 1);
        CHECK(p.normalized_volume() == j);
    }
}

TEST_CASE("berkeley rejects out-of-range parameters") {
    CHECK_THROWS_AS(berkeley(3, 3), BadParameters);
    CHECK_THROWS_AS(berkeley(3, 1), BadParameters);
    CHECK_THROWS_AS(berkeley(2, 2), BadParameters);
}

TEST_CASE("example_2_4 dimensions and tails") {
    Polytope p = example_2_4(4);
    CHECK(p.dim() == 7);
    CHECK(p.vertices().size() == 8);
    CHECK(std::find(p.vertices().begin(), p.vertices().end(),
                    vec({3, 3, 3, 3, 3, 3, 4})) != p.vertices().end());

    Polytope q = example_2_4(5);
    CHECK(q.dim() == 9);
    CHECK(std::find(q.vertices().begin(), q.vertices().end(),
                    vec({4, 4, 4, 4, 4, 4, 4, 4, 5})) != q.vertices().end());

    CHECK_THROWS_AS(example_2_4(3), BadParameters);
}

TEST_CASE("example_2_5 is a (d+1)-vertex simplex with the deep tail") {
    Polytope p = example_2_5(3);
    CHECK(p.dim() == 3);
    CHECK(p.vertices().size() == 4);
    CHECK(std::find(p.vertices().begin(), p.vertices().end(), vec({4, 4, 5})) !=
          p.vertices().end());
    CHECK(example_2_5(6).vertices().size() == 7);
    CHECK_THROWS_AS(example_2_5(2), BadParameters);
}

TEST_CASE("example_2_6 is the 14-vertex block simplex") {
    Polytope p = example_2_6();
    CHECK(p.ambient_dim() == 13);
    CHECK(p.dim() == 13);
    CHECK(p.vertices().size() == 14);
    CHECK(p.is_simplex());
    CHECK(std::find(p.vertices().begin(), p.vertices().end(),
                    vec({3, 3, 3, 3, 3, 3, 4, 0, 0, 0, 0, 0, 0})) != p.vertices().end());
    CHECK(std::find(p.vertices().begin(), p.vertices().end(),
                    vec({0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2})) != p.vertices().end());
    CHECK(p.normalized_volume() == 8);  // 4 * 2 from the two blocks
}

TEST_CASE("boston lists 2(d+1) genuine vertices") {
    Polytope p = boston(4);
    CHECK(p.dim() == 4);
    CHECK(p.vertices().size() == 10);
    CHECK(std::find(p.vertices().begin(), p.vertices().end(), vec({1, 1, 1, 9})) !=
          p.vertices().end());
    CHECK(std::find(p.vertices().begin(), p.vertices().end(), vec({1, 1, 1, 10})) !=
          p.vertices().end());
    CHECK(boston(5).vertices().size() == 12);
    CHECK_THROWS_AS(boston(3), BadParameters);
}

TEST_CASE("minkowski pair: factors IDP, sum not") {
    auto [tri, seg] = minkowski_pair();
    CHECK(tri.dim() == 2);
    CHECK(seg.dim() == 1);
    Budget b;
    CHECK(is_idp(tri, Int(1), b).idp);
    CHECK(is_idp(seg, Int(1), b).idp);
    Polytope sum = minkowski_sum(tri, seg);
    CHECK(sum.dim() == 3);
    CHECK(sum.vertices().size() == 6);
    IdpResult r = is_idp(sum, Int(1), b);
    CHECK_FALSE(r.idp);
    REQUIRE(r.witness.has_value());
    // witness must certify itself: in the dilate, but not peelable
    const GradedPoint& w = *r.witness;
    CHECK(sum.chart_contains_dilated(w.x, w.degree));
    std::vector<IntVec> one = lattice_points(sum, Int(1), b);
    for (const IntVec& y : one)
        CHECK_FALSE(sum.chart_contains_dilated(vec_sub(w.x, y), w.degree - 1));
}
