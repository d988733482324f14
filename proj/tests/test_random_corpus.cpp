#include "doctest.h"

#include "corpus.hpp"

#include "mupoly/profile.hpp"

using namespace mupoly;
using namespace mupoly_test;

TEST_CASE("random corpus satisfies every structural property") {
    CorpusStats stats;
    auto err = check_random_corpus(60, 20260823u, &stats);
    REQUIRE_MESSAGE(!err.has_value(), err.value_or(""));
    CHECK(stats.polytopes == 60);
    CHECK(stats.max_dim == 3);
    CHECK(stats.idp_checks > 0);
    CHECK(stats.lemma_checks > 0);
}

TEST_CASE("corpus generator is deterministic") {
    std::mt19937 a(7), b(7);
    Polytope p = random_polytope(a);
    Polytope q = random_polytope(b);
    CHECK(p.vertices() == q.vertices());
}
