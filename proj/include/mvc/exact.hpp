#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mvc/graph.hpp"

namespace mvc {

// Hard ceiling on how many candidate sets the enumerators may examine
// before giving up with BudgetExceeded.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct ExactAnswer {
    std::optional<int> k;  // nullopt: no matching vertex-cutset exists
    Matching witness;      // valid only when k is set

    bool found() const { return k.has_value(); }
};

// Minimum matching vertex-cutset by enumeration: sizes 1..floor(n/2), all
// matchings of each size in lexicographic edge order, first hit wins.
ExactAnswer exact_min_matching_vertex_cutset(const Graph& g,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

// As above but stops after size k_max.
ExactAnswer exact_min_matching_vertex_cutset_up_to(
    const Graph& g, int k_max, std::uint64_t budget = kDefaultEnumerationBudget);

// True iff kappa_M(g) <= k.
bool decide_matching_vertex_cutset(const Graph& g, int k,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

// Minimum maximal matching (= minimum independent edge dominating set).
// Throws GraphError on an edgeless graph.
std::pair<int, Matching> min_independent_edge_dominating_set(
    const Graph& g, std::uint64_t budget = kDefaultEnumerationBudget);

// Minimum edge dominating set (subset enumeration by increasing size).
std::pair<int, std::vector<Edge>> min_edge_dominating_set(
    const Graph& g, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace mvc
