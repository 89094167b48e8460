#include <doctest.h>

#include <random>

#include "mvc/exact.hpp"
#include "mvc/graph.hpp"
#include "oracles.hpp"

using namespace mvc;

TEST_CASE("build_graph canonicalizes and rejects malformed input") {
    Graph p3 = Graph::build(3, {{1, 0}, {1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(2, 1));
    CHECK_FALSE(p3.has_edge(0, 2));

    CHECK_THROWS_AS(Graph::build(2, {{0, 1}, {0, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}, {1, 0}}), GraphError);  // same edge reversed
    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), GraphError);

    Graph k1 = Graph::build(1, {});
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
}

TEST_CASE("connected_components basics") {
    CHECK(connected_components(make_named("path", 3)) ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(connected_components(Graph::build(2, {})) ==
          std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("icosahedron splits after removing an exact 3-cutset's endpoints") {
    Graph ico = make_named("icosahedron");
    ExactAnswer ans = exact_min_matching_vertex_cutset(ico);
    REQUIRE(ans.found());
    REQUIRE(*ans.k == 3);
    auto comps = components_after_removal(ico, ans.witness.covered_vertices());
    CHECK(comps.size() == 2);
}

TEST_CASE("classify_special detects the excluded families") {
    CHECK(classify_special(make_named("complete", 4)).tag == SpecialTag::CompleteEven);
    CHECK(classify_special(make_named("complete_bipartite", 3, 3)).tag ==
          SpecialTag::BalancedCompleteBipartite);
    CHECK(classify_special(make_named("cycle", 5)).tag == SpecialTag::General);

    for (int n = 2; n <= 12; ++n) {
        SpecialClass c = classify_special(make_named("complete", n));
        CHECK(c.tag == (n % 2 == 0 ? SpecialTag::CompleteEven : SpecialTag::CompleteOdd));
        CHECK(c.order == n);
    }
}

TEST_CASE("classify_special is invariant under relabeling") {
    std::mt19937_64 rng(7);
    std::vector<Graph> samples = {make_named("complete", 6), make_named("complete", 7),
                                  make_named("complete_bipartite", 4, 4),
                                  make_named("cycle", 6), make_named("grid", 2, 3)};
    for (const auto& g : samples) {
        SpecialTag expected = classify_special(g).tag;
        for (int trial = 0; trial < 20; ++trial)
            CHECK(classify_special(oracles::relabel(g, rng)).tag == expected);
    }
}

TEST_CASE("check_cutset verdicts") {
    Graph p4 = make_named("path", 4);
    CHECK(check_cutset(p4, Matching({{1, 2}})).verdict == CutsetVerdict::Disconnected);

    Graph k4 = make_named("complete", 4);
    CHECK(check_cutset(k4, Matching({{0, 1}})).verdict == CutsetVerdict::NotACutset);

    Graph k3 = make_named("complete", 3);
    CHECK(check_cutset(k3, Matching({{0, 1}})).verdict == CutsetVerdict::Trivial);

    // Perfect matching empties K4: not a cutset.
    CHECK(check_cutset(k4, Matching({{0, 1}, {2, 3}})).verdict == CutsetVerdict::NotACutset);

    CHECK_THROWS_AS(check_cutset(p4, Matching({{0, 2}})), GraphError);
}

TEST_CASE("named graphs") {
    Graph ico = make_named("icosahedron");
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);

    Graph k5m = make_named("k5_minus");
    CHECK(k5m.vertex_count() == 5);
    CHECK(k5m.edge_count() == 9);

    Graph c5 = make_named("cycle", 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK_THROWS_AS(make_named("moebius"), GraphError);
}

TEST_CASE("random_connected_graph contract") {
    Graph k1 = random_connected_graph(1, 0.5, 42);
    CHECK(k1.vertex_count() == 1);

    Graph kn = random_connected_graph(6, 1.0, 42);
    CHECK(kn.edge_count() == 15);

    Graph a = random_connected_graph(9, 0.3, 1234);
    Graph b = random_connected_graph(9, 0.3, 1234);
    CHECK(a.edges() == b.edges());

    for (std::uint64_t seed = 0; seed < 40; ++seed)
        CHECK(is_connected(random_connected_graph(7, 0.2, seed)));
}

TEST_CASE("components form a partition with no cross edges") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(8, 0.25, rng());
        std::vector<int> removed;
        for (int v = 0; v < 8; ++v)
            if (rng() % 3 == 0) removed.push_back(v);
        auto comps = components_after_removal(g, removed);

        std::vector<int> seen(8, 0);
        for (const auto& comp : comps) {
            CHECK(is_connected(g.induced(comp)));
            for (int v : comp) seen[v]++;
        }
        for (int v = 0; v < 8; ++v) {
            bool gone = std::find(removed.begin(), removed.end(), v) != removed.end();
            CHECK(seen[v] == (gone ? 0 : 1));
        }
        for (auto [u, v] : g.edges()) {
            int cu = -1, cv = -1;
            for (size_t i = 0; i < comps.size(); ++i) {
                if (std::find(comps[i].begin(), comps[i].end(), u) != comps[i].end()) cu = (int)i;
                if (std::find(comps[i].begin(), comps[i].end(), v) != comps[i].end()) cv = (int)i;
            }
            if (cu >= 0 && cv >= 0) CHECK(cu == cv);  // no edge crosses components
        }
    }
}

TEST_CASE("check_cutset agrees with a from-scratch recount") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_connected_graph(8, 0.3, rng());
        // random matching
        std::vector<Edge> chosen;
        std::vector<char> used(8, 0);
        for (auto [u, v] : g.edges())
            if (!used[u] && !used[v] && rng() % 2) {
                used[u] = used[v] = 1;
                chosen.push_back({u, v});
            }
        if (chosen.empty()) continue;
        Matching m(chosen);
        auto cert = check_cutset(g, m);
        auto recount = components_after_removal(g, m.covered_vertices());
        CHECK(cert.components_after == recount);
        if (recount.size() >= 2)
            CHECK(cert.verdict == CutsetVerdict::Disconnected);
        else if (recount.size() == 1 && recount[0].size() == 1)
            CHECK(cert.verdict == CutsetVerdict::Trivial);
        else
            CHECK(cert.verdict == CutsetVerdict::NotACutset);
    }
}
