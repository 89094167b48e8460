#include "mvc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace mvc {

Graph Graph::build(int vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 0) throw GraphError("negative vertex count");
    Graph g;
    g.n_ = vertex_count;
    g.adj_.assign(vertex_count, {});
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" +
                             std::to_string(v));
        Edge e = make_edge(u, v);
        if (!seen.insert(e).second)
            throw GraphError("duplicate edge " + std::to_string(e.first) + "-" +
                             std::to_string(e.second));
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = (&a == &adj_[u]) ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : static_cast<int>(adj_[0].size());
    for (const auto& nbrs : adj_) d = std::min(d, static_cast<int>(nbrs.size()));
    return d;
}

Graph Graph::induced(const std::vector<int>& vertices, std::vector<int>* to_host) const {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(n_, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
        if (local[u] >= 0 && local[v] >= 0) es.push_back(make_edge(local[u], local[v]));
    if (to_host) *to_host = verts;
    return build(static_cast<int>(verts.size()), std::move(es));
}

Graph Graph::without(const std::vector<int>& removed, std::vector<int>* to_host) const {
    std::vector<char> gone(n_, 0);
    for (int v : removed) gone[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (!gone[v]) keep.push_back(v);
    return induced(keep, to_host);
}

Matching::Matching(std::vector<Edge> edges) {
    std::set<int> used;
    for (auto& e : edges) {
        e = make_edge(e.first, e.second);
        if (e.first == e.second) throw GraphError("matching edge is a self-loop");
        if (!used.insert(e.first).second || !used.insert(e.second).second)
            throw GraphError("matching edges share a vertex");
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

std::vector<int> Matching::covered_vertices() const {
    std::vector<int> vs;
    vs.reserve(2 * edges_.size());
    for (auto [u, v] : edges_) {
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

bool matching_in_graph(const Graph& g, const Matching& m) {
    for (auto [u, v] : m.edges())
        if (!g.has_edge(u, v)) return false;
    return true;
}

std::string to_string(SpecialTag tag) {
    switch (tag) {
        case SpecialTag::CompleteEven: return "CompleteEven";
        case SpecialTag::CompleteOdd: return "CompleteOdd";
        case SpecialTag::BalancedCompleteBipartite: return "BalancedCompleteBipartite";
        case SpecialTag::General: return "General";
    }
    return "?";
}

std::string to_string(CutsetVerdict v) {
    switch (v) {
        case CutsetVerdict::Disconnected: return "Disconnected";
        case CutsetVerdict::Trivial: return "Trivial";
        case CutsetVerdict::NotACutset: return "NotACutset";
    }
    return "?";
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    return components_after_removal(g, {});
}

std::vector<std::vector<int>> components_after_removal(const Graph& g,
                                                       const std::vector<int>& removed) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : removed) gone[v] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (gone[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

SpecialClass classify_special(const Graph& g) {
    const int n = g.vertex_count();
    const long long m = g.edge_count();
    if (n >= 1 && m == static_cast<long long>(n) * (n - 1) / 2) {
        return {n % 2 == 0 ? SpecialTag::CompleteEven : SpecialTag::CompleteOdd, n};
    }
    // 2-coloring; g is connected so one BFS suffices.
    std::vector<int> color(n, -1);
    if (n > 0) {
        color[0] = 0;
        std::queue<int> q;
        q.push(0);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    q.push(w);
                } else if (color[w] == color[u]) {
                    return {SpecialTag::General, 0};
                }
            }
        }
    }
    long long a = std::count(color.begin(), color.end(), 0);
    long long b = n - a;
    if (a == b && m == a * b) return {SpecialTag::BalancedCompleteBipartite, static_cast<int>(a)};
    return {SpecialTag::General, 0};
}

CutsetCertificate check_cutset(const Graph& g, const Matching& m) {
    if (!matching_in_graph(g, m)) throw GraphError("matching is not contained in the graph");
    CutsetCertificate cert;
    cert.removed = m.covered_vertices();
    cert.components_after = components_after_removal(g, cert.removed);
    if (cert.components_after.size() >= 2)
        cert.verdict = CutsetVerdict::Disconnected;
    else if (cert.components_after.size() == 1 && cert.components_after[0].size() == 1)
        cert.verdict = CutsetVerdict::Trivial;
    else
        cert.verdict = CutsetVerdict::NotACutset;
    return cert;
}

namespace {

Graph icosahedron() {
    // 0 apex, 1..5 upper ring, 6..10 lower ring, 11 apex.
    std::vector<Edge> es;
    for (int i = 1; i <= 5; ++i) es.push_back({0, i});
    for (int i = 1; i <= 5; ++i) es.push_back({i, i % 5 + 1});
    for (int i = 6; i <= 10; ++i) es.push_back({i, (i - 5) % 5 + 6});
    for (int i = 6; i <= 10; ++i) es.push_back({i, 11});
    for (int i = 1; i <= 5; ++i) {
        es.push_back({i, i + 5});
        es.push_back({i, i % 5 + 6});
    }
    return Graph::build(12, es);
}

}  // namespace

Graph make_named(const std::string& name, int p1, int p2) {
    std::vector<Edge> es;
    if (name == "complete") {
        if (p1 < 1) throw GraphError("complete: need n >= 1");
        for (int u = 0; u < p1; ++u)
            for (int v = u + 1; v < p1; ++v) es.push_back({u, v});
        return Graph::build(p1, es);
    }
    if (name == "complete_bipartite") {
        if (p1 < 1 || p2 < 1) throw GraphError("complete_bipartite: need both sides >= 1");
        for (int u = 0; u < p1; ++u)
            for (int v = 0; v < p2; ++v) es.push_back({u, p1 + v});
        return Graph::build(p1 + p2, es);
    }
    if (name == "cycle") {
        if (p1 < 3) throw GraphError("cycle: need n >= 3");
        for (int u = 0; u < p1; ++u) es.push_back({u, (u + 1) % p1});
        return Graph::build(p1, es);
    }
    if (name == "path") {
        if (p1 < 1) throw GraphError("path: need n >= 1");
        for (int u = 0; u + 1 < p1; ++u) es.push_back({u, u + 1});
        return Graph::build(p1, es);
    }
    if (name == "star") {
        if (p1 < 1) throw GraphError("star: need >= 1 leaf");
        for (int v = 1; v <= p1; ++v) es.push_back({0, v});
        return Graph::build(p1 + 1, es);
    }
    if (name == "grid") {
        if (p1 < 1 || p2 < 1) throw GraphError("grid: need rows, cols >= 1");
        auto id = [&](int r, int c) { return r * p2 + c; };
        for (int r = 0; r < p1; ++r)
            for (int c = 0; c < p2; ++c) {
                if (c + 1 < p2) es.push_back({id(r, c), id(r, c + 1)});
                if (r + 1 < p1) es.push_back({id(r, c), id(r + 1, c)});
            }
        return Graph::build(p1 * p2, es);
    }
    if (name == "icosahedron") return icosahedron();
    if (name == "k5_minus") {
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (!(u == 3 && v == 4)) es.push_back({u, v});
        return Graph::build(5, es);
    }
    throw GraphError("unknown named graph: " + name);
}

Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed) {
    if (n < 1) throw GraphError("random_connected_graph: need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::set<Edge> es;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        es.insert(make_edge(order[i], order[pick(rng)]));
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (es.count({u, v})) continue;
            if (coin(rng) < edge_probability) es.insert({u, v});
        }
    return Graph::build(n, {es.begin(), es.end()});
}

}  // namespace mvc
