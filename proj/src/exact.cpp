#include "mvc/exact.hpp"

#include <algorithm>
#include <functional>

#include "mvc/errors.hpp"

namespace mvc {

namespace {

struct Budget {
    std::uint64_t remaining;
    void spend() {
        if (remaining == 0)
            throw BudgetExceeded("enumeration budget exhausted");
        --remaining;
    }
};

// Enumerates matchings of size exactly k in lexicographic order over the
// sorted edge list; stops at the first one `accept` likes.
bool for_each_matching(const Graph& g, int k, Budget& budget,
                       const std::function<bool(const std::vector<Edge>&)>& accept) {
    const auto& edges = g.edges();
    std::vector<Edge> chosen;
    std::vector<char> used(g.vertex_count(), 0);
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(chosen.size()) == k) {
            budget.spend();
            return accept(chosen);
        }
        int need = k - static_cast<int>(chosen.size());
        for (int i = from; i + need <= static_cast<int>(edges.size()); ++i) {
            auto [u, v] = edges[i];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            chosen.push_back(edges[i]);
            if (rec(i + 1)) return true;
            chosen.pop_back();
            used[u] = used[v] = 0;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

ExactAnswer exact_min_matching_vertex_cutset_up_to(const Graph& g, int k_max,
                                                   std::uint64_t budget_limit) {
    Budget budget{budget_limit};
    ExactAnswer ans;
    k_max = std::min(k_max, g.vertex_count() / 2);
    for (int k = 1; k <= k_max && !ans.found(); ++k) {
        for_each_matching(g, k, budget, [&](const std::vector<Edge>& chosen) {
            Matching m{chosen};
            if (check_cutset(g, m).is_cutset()) {
                ans.k = k;
                ans.witness = std::move(m);
                return true;
            }
            return false;
        });
    }
    return ans;
}

ExactAnswer exact_min_matching_vertex_cutset(const Graph& g, std::uint64_t budget) {
    return exact_min_matching_vertex_cutset_up_to(g, g.vertex_count() / 2, budget);
}

bool decide_matching_vertex_cutset(const Graph& g, int k, std::uint64_t budget) {
    if (k < 1) return false;
    return exact_min_matching_vertex_cutset_up_to(g, k, budget).found();
}

std::pair<int, Matching> min_independent_edge_dominating_set(const Graph& g,
                                                             std::uint64_t budget_limit) {
    if (g.edge_count() == 0)
        throw GraphError("edge dominating set undefined on an edgeless graph");
    Budget budget{budget_limit};
    for (int k = 1; k <= g.vertex_count() / 2; ++k) {
        std::optional<Matching> hit;
        for_each_matching(g, k, budget, [&](const std::vector<Edge>& chosen) {
            std::vector<char> covered(g.vertex_count(), 0);
            for (auto [u, v] : chosen) covered[u] = covered[v] = 1;
            // A matching dominates all edges iff it is maximal.
            for (auto [u, v] : g.edges())
                if (!covered[u] && !covered[v]) return false;
            hit = Matching{chosen};
            return true;
        });
        if (hit) return {k, std::move(*hit)};
    }
    throw InternalInvariantViolation("a maximal matching always exists");
}

std::pair<int, std::vector<Edge>> min_edge_dominating_set(const Graph& g,
                                                          std::uint64_t budget_limit) {
    if (g.edge_count() == 0)
        throw GraphError("edge dominating set undefined on an edgeless graph");
    Budget budget{budget_limit};
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());

    for (int k = 1; k <= m; ++k) {
        std::vector<int> idx(k);
        std::vector<Edge> result;
        std::function<bool(int, int)> rec = [&](int pos, int from) -> bool {
            if (pos == k) {
                budget.spend();
                std::vector<char> covered(g.vertex_count(), 0);
                for (int i : idx) {
                    covered[edges[i].first] = 1;
                    covered[edges[i].second] = 1;
                }
                for (auto [u, v] : edges)
                    if (!covered[u] && !covered[v]) return false;
                for (int i : idx) result.push_back(edges[i]);
                return true;
            }
            for (int i = from; i + (k - pos) <= m; ++i) {
                idx[pos] = i;
                if (rec(pos + 1, i + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return {k, std::move(result)};
    }
    throw InternalInvariantViolation("the full edge set dominates itself");
}

}  // namespace mvc
