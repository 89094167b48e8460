#include "mvc/reduction.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "mvc/errors.hpp"

namespace mvc {

namespace {

void check_bipartition(const Graph& h, const std::vector<int>& X, const std::vector<int>& Y) {
    const int n = h.vertex_count();
    std::vector<int> side(n, -1);
    for (int v : X) {
        if (v < 0 || v >= n || side[v] != -1) throw GraphError("bad bipartition part X");
        side[v] = 0;
    }
    for (int v : Y) {
        if (v < 0 || v >= n || side[v] != -1) throw GraphError("bad bipartition part Y");
        side[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1) throw GraphError("bipartition does not cover vertex " + std::to_string(v));
    for (auto [u, v] : h.edges())
        if (side[u] == side[v])
            throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " does not cross the bipartition");
}

}  // namespace

ReductionInstance build_reduction(const Graph& h, std::vector<int> X, std::vector<int> Y,
                                  int k) {
    std::sort(X.begin(), X.end());
    std::sort(Y.begin(), Y.end());
    check_bipartition(h, X, Y);
    if (!is_connected(h)) throw GraphError("source graph must be connected");
    int kmax = static_cast<int>(std::min(X.size(), Y.size()));
    if (k < 1 || k > kmax)
        throw GraphError("budget k must lie in 1..min(|X|,|Y|) = 1.." + std::to_string(kmax));

    ReductionInstance inst;
    inst.source = h;
    inst.X = X;
    inst.Y = Y;
    inst.budget = k;

    const int n = h.vertex_count();
    std::vector<Edge> edges = h.edges();
    for (size_t i = 0; i < X.size(); ++i) inst.x_mirror.push_back(n + static_cast<int>(i));
    for (size_t j = 0; j < Y.size(); ++j)
        inst.y_mirror.push_back(n + static_cast<int>(X.size() + j));
    for (int x : X)
        for (int xm : inst.x_mirror) edges.push_back({x, xm});
    for (int y : Y)
        for (int ym : inst.y_mirror) edges.push_back({y, ym});
    inst.gadget = Graph::build(2 * n, std::move(edges));
    return inst;
}

EquivalenceReport verify_equivalence(const Graph& h, std::vector<int> X, std::vector<int> Y,
                                     int k_max, std::uint64_t budget) {
    int cap = static_cast<int>(std::min(X.size(), Y.size()));
    k_max = std::min(k_max, cap);
    if (k_max < 1) throw GraphError("verify_equivalence: empty k range");

    ReductionInstance inst = build_reduction(h, X, Y, k_max);

    EquivalenceReport rep;
    rep.ieds_size = min_independent_edge_dominating_set(h, budget).first;
    rep.gadget_class = classify_special(inst.gadget);
    ExactAnswer gadget_min = exact_min_matching_vertex_cutset_up_to(inst.gadget, k_max, budget);
    for (int k = 1; k <= k_max; ++k) {
        rep.rows.push_back({k, rep.ieds_size <= k,
                            gadget_min.found() && *gadget_min.k <= k});
    }
    return rep;
}

std::tuple<Graph, std::vector<int>, std::vector<int>> random_bipartite_bounded_degree(
    int nx, int ny, int max_degree, std::uint64_t seed) {
    if (nx < 1 || ny < 1 || max_degree < 1)
        throw GraphError("random_bipartite_bounded_degree: need nx, ny, max_degree >= 1");

    std::vector<int> X(nx), Y(ny);
    for (int i = 0; i < nx; ++i) X[i] = i;
    for (int j = 0; j < ny; ++j) Y[j] = nx + j;

    std::mt19937_64 rng(seed);
    std::vector<int> deg(nx + ny, 0);
    std::vector<Edge> edges;

    // Spanning tree: attach each new vertex to a minimum-degree vertex that
    // is already placed on the opposite side.
    std::vector<int> placed_x{0}, placed_y;
    std::vector<int> pending;
    for (int i = 1; i < nx; ++i) pending.push_back(i);
    for (int j = 0; j < ny; ++j) pending.push_back(nx + j);
    std::shuffle(pending.begin(), pending.end(), rng);

    while (!pending.empty()) {
        // First pending vertex whose opposite side still has a free slot;
        // under a feasible degree bound one always exists.
        size_t idx = pending.size();
        int best = -1;
        for (size_t i = 0; i < pending.size() && best < 0; ++i) {
            auto& pool = pending[i] < nx ? placed_y : placed_x;
            for (int u : pool)
                if (deg[u] < max_degree && (best < 0 || deg[u] < deg[best])) best = u;
            if (best >= 0) idx = i;
        }
        if (best < 0)
            throw GraphError("infeasible parameters: degree bound too tight for a spanning tree");
        int v = pending[idx];
        pending.erase(pending.begin() + static_cast<long>(idx));
        edges.push_back(make_edge(v, best));
        ++deg[v];
        ++deg[best];
        (v < nx ? placed_x : placed_y).push_back(v);
    }

    // Random degree-respecting additions.
    std::vector<Edge> candidates;
    for (int x : X)
        for (int y : Y) candidates.push_back(make_edge(x, y));
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::set<Edge> present(edges.begin(), edges.end());
    for (Edge e : candidates) {
        if (present.count(e)) continue;
        if (deg[e.first] >= max_degree || deg[e.second] >= max_degree) continue;
        if (coin(rng) < 0.5) {
            edges.push_back(e);
            present.insert(e);
            ++deg[e.first];
            ++deg[e.second];
        }
    }

    return {Graph::build(nx + ny, std::move(edges)), std::move(X), std::move(Y)};
}

std::string serialize_reduction(const ReductionInstance& inst) {
    std::ostringstream out;
    auto list = [](const std::vector<int>& vs) {
        std::ostringstream s;
        for (size_t i = 0; i < vs.size(); ++i) s << (i ? "," : "") << vs[i];
        return s.str();
    };
    out << "# X: " << list(inst.X) << "\n";
    out << "# Y: " << list(inst.Y) << "\n";
    out << "# X': " << list(inst.x_mirror) << "\n";
    out << "# Y': " << list(inst.y_mirror) << "\n";
    out << "# k: " << inst.budget << "\n";
    out << inst.gadget.vertex_count() << " " << inst.gadget.edge_count() << "\n";
    for (auto [u, v] : inst.gadget.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace mvc
