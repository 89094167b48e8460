#include "mvc/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace mvc {

namespace {

// Unit-capacity directed network with residual bookkeeping.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;                 // arc 2k and 2k+1 are a residual pair
    std::vector<std::vector<int>> out;     // node -> arc indexes
    int source = 0, sink = 0;

    explicit FlowNetwork(int nodes) : out(nodes) {}

    void add_arc(int from, int to, int cap) {
        out[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        out[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }

    // One shortest augmenting path; false when none exists.
    bool augment() {
        std::vector<int> via(out.size(), -1);  // arc used to reach node
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(source);
        seen[source] = 1;
        while (!q.empty() && !seen[sink]) {
            int u = q.front();
            q.pop();
            for (int a : out[u]) {
                int v = arcs[a].to;
                if (arcs[a].cap > 0 && !seen[v]) {
                    seen[v] = 1;
                    via[v] = a;
                    q.push(v);
                }
            }
        }
        if (!seen[sink]) return false;
        for (int v = sink; v != source;) {
            int a = via[v];
            arcs[a].cap -= 1;
            arcs[a ^ 1].cap += 1;
            v = arcs[a ^ 1].to;
        }
        return true;
    }

    // Nodes reachable from source in the residual network.
    std::vector<char> residual_reachable() const {
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(source);
        seen[source] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : out[u]) {
                if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
                    seen[arcs[a].to] = 1;
                    q.push(arcs[a].to);
                }
            }
        }
        return seen;
    }
};

// Split network: vertex v becomes 2v (in) and 2v+1 (out) with a unit
// internal arc; graph edges become high-capacity arcs between shells, so a
// minimum cut consists of internal arcs only.
FlowNetwork split_network(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    FlowNetwork net(2 * n);
    net.source = 2 * s + 1;
    net.sink = 2 * t;
    for (int v = 0; v < n; ++v)
        if (v != s && v != t) net.add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
        net.add_arc(2 * u + 1, 2 * v, n);
        net.add_arc(2 * v + 1, 2 * u, n);
    }
    return net;
}

std::vector<int> extract_cut(const FlowNetwork& net, const Graph& g, int s, int t) {
    auto reach = net.residual_reachable();
    std::vector<int> cut;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == s || v == t) continue;
        if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    }
    return cut;
}

}  // namespace

std::optional<std::vector<int>> min_st_vertex_cut_bounded(const Graph& g, int s, int t,
                                                          int bound) {
    if (s == t) throw GraphError("min_st_vertex_cut: s == t");
    if (g.has_edge(s, t)) throw GraphError("min_st_vertex_cut: s and t are adjacent");
    FlowNetwork net = split_network(g, s, t);
    int flow = 0;
    while (net.augment()) {
        ++flow;
        if (flow >= bound) return std::nullopt;
    }
    return extract_cut(net, g, s, t);
}

std::vector<int> min_st_vertex_cut(const Graph& g, int s, int t) {
    auto cut = min_st_vertex_cut_bounded(g, s, t, std::numeric_limits<int>::max());
    return *cut;
}

VertexCut min_vertex_cut(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw GraphError("min_vertex_cut: need n >= 2");
    const long long complete_m = static_cast<long long>(n) * (n - 1) / 2;
    if (g.edge_count() == complete_m) {
        VertexCut cut;
        cut.kind = VertexCut::Kind::CompleteGraphConvention;
        for (int v = 0; v + 1 < n; ++v) cut.vertices.push_back(v);
        return cut;
    }

    int s = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(s)) s = v;

    // N(s) separates s from any non-neighbor, so it seeds the search.
    VertexCut best;
    best.vertices = g.neighbors(s);

    auto consider = [&](int a, int b) {
        if (a == b || g.has_edge(a, b)) return;
        if (auto cut = min_st_vertex_cut_bounded(g, a, b, best.size()))
            if (static_cast<int>(cut->size()) < best.size()) best.vertices = std::move(*cut);
    };

    for (int t = 0; t < n; ++t)
        if (t != s) consider(s, t);
    for (int u : g.neighbors(s))
        for (int t = 0; t < n; ++t)
            if (t != u) consider(u, t);

    std::sort(best.vertices.begin(), best.vertices.end());
    return best;
}

}  // namespace mvc
