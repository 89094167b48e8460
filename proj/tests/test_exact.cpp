#include <doctest.h>

#include <random>

#include "mvc/exact.hpp"
#include "mvc/graph.hpp"

using namespace mvc;

TEST_CASE("exact fixtures") {
    ExactAnswer ico = exact_min_matching_vertex_cutset(make_named("icosahedron"));
    REQUIRE(ico.found());
    CHECK(*ico.k == 3);
    CHECK(check_cutset(make_named("icosahedron"), ico.witness).is_cutset());

    ExactAnswer k5m = exact_min_matching_vertex_cutset(make_named("k5_minus"));
    REQUIRE(k5m.found());
    CHECK(*k5m.k == 2);

    CHECK_FALSE(exact_min_matching_vertex_cutset(make_named("complete", 4)).found());

    // C5: any single edge leaves a connected P3; two-edge matchings trivialize.
    ExactAnswer c5 = exact_min_matching_vertex_cutset(make_named("cycle", 5));
    REQUIRE(c5.found());
    CHECK(*c5.k == 2);
}

TEST_CASE("decide is the thresholded oracle and is monotone") {
    Graph ico = make_named("icosahedron");
    CHECK_FALSE(decide_matching_vertex_cutset(ico, 2));
    CHECK(decide_matching_vertex_cutset(ico, 3));
    CHECK(decide_matching_vertex_cutset(ico, 4));

    CHECK(decide_matching_vertex_cutset(make_named("path", 4), 1));
    CHECK(decide_matching_vertex_cutset(make_named("complete_bipartite", 2, 3), 2));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(7, 0.3, rng());
        bool prev = false;
        for (int k = 1; k <= 3; ++k) {
            bool now = decide_matching_vertex_cutset(g, k);
            if (prev) CHECK(now);
            prev = now;
        }
    }
}

TEST_CASE("witnesses are valid and lexicographically first") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(8, 0.3, rng());
        ExactAnswer ans = exact_min_matching_vertex_cutset(g);
        if (!ans.found()) continue;
        CHECK(check_cutset(g, ans.witness).is_cutset());
        ExactAnswer again = exact_min_matching_vertex_cutset(g);
        CHECK(again.witness == ans.witness);
    }
}

TEST_CASE("edge dominating sets") {
    CHECK(min_independent_edge_dominating_set(make_named("path", 4)).first == 1);
    CHECK(min_independent_edge_dominating_set(make_named("path", 4)).second.edges() ==
          std::vector<Edge>{{1, 2}});
    CHECK(min_independent_edge_dominating_set(make_named("star", 3)).first == 1);
    CHECK(min_independent_edge_dominating_set(make_named("cycle", 7)).first == 3);

    CHECK(min_edge_dominating_set(make_named("path", 4)).first == 1);
    CHECK(min_edge_dominating_set(make_named("cycle", 7)).first == 3);

    CHECK_THROWS_AS(min_edge_dominating_set(Graph::build(3, {})), GraphError);
    CHECK_THROWS_AS(min_independent_edge_dominating_set(Graph::build(3, {}), 10), GraphError);
}

TEST_CASE("EDS and IEDS minima coincide") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(3 + static_cast<int>(rng() % 6), 0.35, rng());
        CHECK(min_edge_dominating_set(g).first ==
              min_independent_edge_dominating_set(g).first);
    }
}

TEST_CASE("budget guard aborts enumeration") {
    Graph big = make_named("complete", 10);
    CHECK_THROWS_AS(exact_min_matching_vertex_cutset(big, 5), BudgetExceeded);
}
