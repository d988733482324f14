#include "doctest.h"

#include "graph_fixtures.hpp"
#include "mupoly/edge_polytope.hpp"
#include "mupoly/errors.hpp"
#include "mupoly/semigroup.hpp"

#include <algorithm>
#include <numeric>

using namespace mupoly;

namespace {

SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    e.push_back({1, n});
    return SimpleGraph::from_edges(n, e);
}

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
    return SimpleGraph::from_edges(n, e);
}

// two triangles {1,2,3} and {4,5,6} joined by the path 3 - 7 - 4
SimpleGraph two_triangles_path() {
    return SimpleGraph::from_edges(
        7, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 7}, {7, 4}});
}

// two triangles sharing vertex 1
SimpleGraph bowtie() {
    return SimpleGraph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
}

// four triangles A={1,2,3}, B={3,4,5}, C={6,7,8}, D={8,9,10} with A,B and
// C,D glued at a vertex, linked by the path 5 - 11 - 6. The exceptional
// pairs are exactly (A,C),(A,D),(B,C),(B,D).
SimpleGraph double_bowtie() {
    return SimpleGraph::from_edges(11, {{1, 2},
                                        {2, 3},
                                        {1, 3},
                                        {3, 4},
                                        {4, 5},
                                        {3, 5},
                                        {6, 7},
                                        {7, 8},
                                        {6, 8},
                                        {8, 9},
                                        {9, 10},
                                        {8, 10},
                                        {5, 11},
                                        {11, 6}});
}

} // namespace

TEST_CASE("graph construction validates and normalizes") {
    CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{1, 1}}), BadParameters);
    CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{1, 4}, {1, 2}, {2, 3}}), BadParameters);
    CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{1, 2}, {2, 1}, {2, 3}}), BadParameters);
    CHECK_THROWS_AS(SimpleGraph::from_edges(4, {{1, 2}, {3, 4}}), Disconnected);

    SimpleGraph g = SimpleGraph::from_edges(3, {{3, 2}, {2, 1}, {3, 1}});
    std::vector<std::pair<int, int>> want = {{1, 2}, {1, 3}, {2, 3}};
    CHECK(g.edges == want);
}

TEST_CASE("edge polytopes of small graphs") {
    Polytope k3 = edge_polytope(cycle_graph(3));
    CHECK(k3.dim() == 2);
    std::vector<IntVec> verts = {{Int(0), Int(1), Int(1)}, {Int(1), Int(0), Int(1)},
                                 {Int(1), Int(1), Int(0)}};
    CHECK(k3.vertices() == verts);

    Polytope path = edge_polytope(SimpleGraph::from_edges(3, {{1, 2}, {2, 3}}));
    CHECK(path.dim() == 1);
    CHECK(path.vertices().size() == 2);

    Polytope k4 = edge_polytope(complete_graph(4));
    CHECK(k4.dim() == 3);
    CHECK(k4.vertices().size() == 6);

    Polytope g25 = edge_polytope(hub_of_triangles());
    CHECK(g25.ambient_dim() == 25);
    CHECK(g25.dim() == 24);
    CHECK(g25.vertices().size() == 32);
}

TEST_CASE("minimal odd cycle enumeration") {
    Budget b;
    CHECK(minimal_odd_cycles(cycle_graph(4), b).empty());
    CHECK(minimal_odd_cycles(cycle_graph(6), b).empty());

    std::vector<OddCycle> c5 = minimal_odd_cycles(cycle_graph(5), b);
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].vertices == std::vector<int>{1, 2, 3, 4, 5});

    std::vector<OddCycle> k4 = minimal_odd_cycles(complete_graph(4), b);
    CHECK(k4.size() == 4); // the four triangles; 4-cycles all have chords

    std::vector<OddCycle> g = minimal_odd_cycles(hub_of_triangles(), b);
    REQUIRE(g.size() == 8);
    for (int i = 0; i < 8; ++i) {
        std::vector<int> tri = {3 * i + 1, 3 * i + 2, 3 * i + 3};
        CHECK(g[static_cast<std::size_t>(i)].vertices == tri);
    }

    std::vector<OddCycle> gp = minimal_odd_cycles(hub_with_pentagon(), b);
    REQUIRE(gp.size() == 9);
    CHECK(gp.back().vertices == std::vector<int>{26, 27, 28, 29, 30});
}

TEST_CASE("exceptional pairs and the odd cycle condition") {
    Budget b;
    CHECK(odd_cycle_condition(cycle_graph(4), b));
    CHECK(odd_cycle_condition(cycle_graph(5), b)); // a single odd cycle has no pair
    CHECK(odd_cycle_condition(complete_graph(4), b));
    CHECK(odd_cycle_condition(bowtie(), b));

    std::vector<ExceptionalPair> tp = exceptional_pairs(two_triangles_path(), b);
    REQUIRE(tp.size() == 1);
    CHECK(tp[0].m == 3);
    IntVec e = {Int(1), Int(1), Int(1), Int(1), Int(1), Int(1), Int(0)};
    CHECK(tp[0].e == e);
    CHECK_FALSE(odd_cycle_condition(two_triangles_path(), b));

    std::vector<ExceptionalPair> pg = exceptional_pairs(hub_of_triangles(), b);
    CHECK(pg.size() == 28);
    CHECK(std::all_of(pg.begin(), pg.end(), [](const ExceptionalPair& p) { return p.m == 3; }));

    std::vector<ExceptionalPair> pgp = exceptional_pairs(hub_with_pentagon(), b);
    CHECK(pgp.size() == 36); // 28 triangle pairs + 8 triangle-pentagon pairs
    int max_m = 0;
    for (const ExceptionalPair& p : pgp) max_m = std::max(max_m, p.m);
    CHECK(max_m == 4);
    // the indicator of the vertex union always sums to twice the pair degree
    for (const ExceptionalPair& p : pgp) {
        Int sum = std::accumulate(p.e.begin(), p.e.end(), Int(0));
        CHECK(sum == 2 * p.m);
    }
}

TEST_CASE("closed-form thresholds of the reference graphs") {
    Budget b;
    CHECK(mu_va_hilb_graph(hub_of_triangles(), b) == 3);
    CHECK(mu_va_hilb_graph(hub_with_pentagon(), b) == 4);
    CHECK(mu_va_hilb_graph(cycle_graph(4), b) == 1);
    CHECK(mu_va_hilb_graph(two_triangles_path(), b) == 3);

    CHECK(mu_hole_graph(hub_of_triangles(), b) == 12);
    CHECK(mu_hole_graph(hub_with_pentagon(), b) == 13);
    CHECK(mu_hole_graph(bowtie(), b) == 1);
    CHECK(mu_hole_graph(two_triangles_path(), b) == 3);

    // both readings of "distinct" agree on the reference graphs...
    CHECK(mu_hole_graph(hub_of_triangles(), b, HoleMatchingMode::VertexDisjoint) == 12);
    CHECK(mu_hole_graph(hub_with_pentagon(), b, HoleMatchingMode::VertexDisjoint) == 13);
    // ...but differ once matched pairs share vertices across pairs
    CHECK(mu_hole_graph(double_bowtie(), b) == 6);
    CHECK(mu_hole_graph(double_bowtie(), b, HoleMatchingMode::VertexDisjoint) == 3);
}

TEST_CASE("odd cycle condition matches the dilation-one peel") {
    for (const SimpleGraph& g : {cycle_graph(3), cycle_graph(4), cycle_graph(5), cycle_graph(7),
                                 complete_graph(4), bowtie(), two_triangles_path()}) {
        Budget b;
        bool occ = odd_cycle_condition(g, b);
        Polytope p = edge_polytope(g);
        CHECK(occ == is_idp(p, Int(1), b).idp);
        CHECK(mu_va_hilb_graph(g, b) == mu_hilb(p, b));
    }
}

TEST_CASE("graph profile: exact on small graphs") {
    RunConfig cfg;
    GraphProfile bt = graph_profile(bowtie(), cfg);
    CHECK(bt.va == 1);
    CHECK(bt.hole == 1);
    CHECK(bt.midp_exact);
    CHECK(bt.midp_lower == 1);
    CHECK(bt.idp_exact);
    CHECK(bt.idp_lower == 1);

    GraphProfile tp = graph_profile(two_triangles_path(), cfg);
    CHECK(tp.va == 3);
    CHECK(tp.hilb == 3);
    CHECK(tp.hole == 3);
    CHECK(tp.midp_exact);
    CHECK(tp.midp_lower == 3);
    CHECK(tp.idp_exact);
    CHECK(tp.idp_lower == 3);
    CHECK(tp.pairs.size() == 1);
}

TEST_CASE("graph profile: brackets the hub graph under a tight budget") {
    RunConfig cfg;
    cfg.budget.point_cap = 200000;
    GraphProfile r = graph_profile(hub_of_triangles(), cfg);
    CHECK(r.va == 3);
    CHECK(r.hilb == 3);
    CHECK(r.hole == 12);
    CHECK_FALSE(r.midp_exact);
    CHECK(r.midp_lower == 3);
    CHECK(r.midp_upper == 12);
    CHECK_FALSE(r.idp_exact);
    CHECK(r.idp_lower == 3);
    CHECK(r.idp_upper == 12);
}
