#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "mvc/exact.hpp"
#include "mvc/graph.hpp"

namespace mvc {

// Hardness gadget: a bipartite source H with parts (X, Y) gains mirror
// stable sets X', Y' and the complete joins X x X', Y x Y'.
struct ReductionInstance {
    Graph source;
    std::vector<int> X, Y;          // bipartition of the source, sorted
    Graph gadget;
    std::vector<int> x_mirror, y_mirror;  // gadget ids of X', Y'
    int budget = 0;

    // Gadget id of source vertex v (ids are shared by construction).
    static int gadget_id(int v) { return v; }
};

// Validates that (X, Y) bipartitions h and 1 <= k <= min(|X|,|Y|), then
// builds the gadget: |V| = 2(|X|+|Y|), |E| = |E(h)| + |X|^2 + |Y|^2.
ReductionInstance build_reduction(const Graph& h, std::vector<int> X, std::vector<int> Y,
                                  int k);

struct EquivalenceReport {
    struct Row {
        int k;
        bool ieds_at_most_k;
        bool gadget_cutset_at_most_k;
        bool agree() const { return ieds_at_most_k == gadget_cutset_at_most_k; }
    };
    int ieds_size = 0;
    std::vector<Row> rows;
    SpecialClass gadget_class;  // reported, never asserted

    bool all_agree() const {
        for (const auto& r : rows)
            if (!r.agree()) return false;
        return true;
    }
};

// Checks, for every k in 1..k_max (capped at min(|X|,|Y|)), that
// min-IEDS(h) <= k iff the gadget has a matching vertex-cutset of size <= k.
EquivalenceReport verify_equivalence(const Graph& h, std::vector<int> X, std::vector<int> Y,
                                     int k_max,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

// Connected bipartite graph with parts of sizes nx, ny and maximum degree
// at most max_degree: spanning tree first, then random degree-respecting
// additions. Deterministic per seed. Throws GraphError when no such tree fits
// the degree bound.
std::tuple<Graph, std::vector<int>, std::vector<int>> random_bipartite_bounded_degree(
    int nx, int ny, int max_degree, std::uint64_t seed);

// Serialize as edge-list text with a comment header recording the parts and k.
std::string serialize_reduction(const ReductionInstance& inst);

}  // namespace mvc
