#include "mvc/matching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "mvc/errors.hpp"

namespace mvc {

namespace {

// Classic blossom-contraction matcher (Edmonds), O(n^3)-style.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(n_, -1), parent_(n_), base_(n_) {}

    std::vector<int> solve() {
        // Greedy seed keeps the augmentation count low.
        for (auto [u, v] : g_.edges())
            if (match_[u] < 0 && match_[v] < 0) {
                match_[u] = v;
                match_[v] = u;
            }
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) find_augmenting_path(v);
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> mark(n_, 0);
        for (;;) {
            a = base_[a];
            mark[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (mark[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<char>& in_blossom) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = 1;
            in_blossom[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void find_augmenting_path(int root) {
        std::vector<char> used(n_, 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        std::queue<int> q;
        q.push(root);
        used[root] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    // Odd cycle: contract the blossom.
                    int b = lca(v, to);
                    std::vector<char> in_blossom(n_, 0);
                    mark_path(v, b, to, in_blossom);
                    mark_path(to, b, v, in_blossom);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom[base_[i]]) {
                            base_[i] = b;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) {
                        // Augment along the alternating tree.
                        int u = to;
                        while (u >= 0) {
                            int pv = parent_[u];
                            int next = match_[pv];
                            match_[u] = pv;
                            match_[pv] = u;
                            u = next;
                        }
                        return;
                    }
                    used[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    auto match = Blossom(g).solve();
    std::vector<Edge> edges;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (match[v] > v) edges.push_back({v, match[v]});
    return Matching(std::move(edges));
}

BipartiteView BipartiteView::from_graph(const Graph& g, std::vector<int> left,
                                        std::vector<int> right) {
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    BipartiteView bv;
    bv.left_ = std::move(left);
    bv.right_ = std::move(right);
    std::vector<int> lpos(g.vertex_count(), -1), rpos(g.vertex_count(), -1);
    for (int i = 0; i < bv.left_size(); ++i) lpos[bv.left_[i]] = i;
    for (int j = 0; j < bv.right_size(); ++j) {
        if (lpos[bv.right_[j]] >= 0) throw GraphError("bipartite view sides overlap");
        rpos[bv.right_[j]] = j;
    }
    bv.adj_.assign(bv.left_size(), {});
    for (auto [u, v] : g.edges()) {
        int i = lpos[u] >= 0 ? lpos[u] : lpos[v];
        int j = rpos[u] >= 0 ? rpos[u] : rpos[v];
        if (i >= 0 && j >= 0) bv.adj_[i].push_back(j);
    }
    for (auto& row : bv.adj_) std::sort(row.begin(), row.end());
    return bv;
}

int BipartiteView::left_pos(int host) const {
    auto it = std::lower_bound(left_.begin(), left_.end(), host);
    return it != left_.end() && *it == host ? static_cast<int>(it - left_.begin()) : -1;
}

int BipartiteView::right_pos(int host) const {
    auto it = std::lower_bound(right_.begin(), right_.end(), host);
    return it != right_.end() && *it == host ? static_cast<int>(it - right_.begin()) : -1;
}

BipartiteView BipartiteView::without(const std::vector<int>& hosts) const {
    std::vector<char> gone_l(left_.size(), 0), gone_r(right_.size(), 0);
    for (int h : hosts) {
        if (int i = left_pos(h); i >= 0) gone_l[i] = 1;
        if (int j = right_pos(h); j >= 0) gone_r[j] = 1;
    }
    BipartiteView out;
    std::vector<int> rmap(right_.size(), -1);
    for (int j = 0; j < right_size(); ++j)
        if (!gone_r[j]) {
            rmap[j] = static_cast<int>(out.right_.size());
            out.right_.push_back(right_[j]);
        }
    for (int i = 0; i < left_size(); ++i) {
        if (gone_l[i]) continue;
        out.left_.push_back(left_[i]);
        std::vector<int> row;
        for (int j : adj_[i])
            if (rmap[j] >= 0) row.push_back(rmap[j]);
        out.adj_.push_back(std::move(row));
    }
    return out;
}

HkResult hopcroft_karp(const BipartiteView& bv) {
    const int nl = bv.left_size(), nr = bv.right_size();
    const int INF = nl + nr + 1;
    HkResult res;
    res.match_left.assign(nl, -1);
    res.match_right.assign(nr, -1);
    std::vector<int> dist(nl);

    auto bfs = [&]() {
        std::queue<int> q;
        for (int i = 0; i < nl; ++i) {
            if (res.match_left[i] < 0) {
                dist[i] = 0;
                q.push(i);
            } else {
                dist[i] = INF;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j : bv.adj(i)) {
                int i2 = res.match_right[j];
                if (i2 < 0) {
                    found = true;
                } else if (dist[i2] == INF) {
                    dist[i2] = dist[i] + 1;
                    q.push(i2);
                }
            }
        }
        return found;
    };

    std::vector<char> visited;
    std::function<bool(int)> dfs = [&](int i) {
        visited[i] = 1;
        for (int j : bv.adj(i)) {
            int i2 = res.match_right[j];
            if (i2 < 0 || (!visited[i2] && dist[i2] == dist[i] + 1 && dfs(i2))) {
                res.match_left[i] = j;
                res.match_right[j] = i;
                return true;
            }
        }
        dist[i] = INF;
        return false;
    };

    while (bfs()) {
        visited.assign(nl, 0);
        for (int i = 0; i < nl; ++i)
            if (res.match_left[i] < 0 && dfs(i)) ++res.size;
    }
    return res;
}

std::optional<std::vector<int>> hall_violator(const BipartiteView& bv) {
    HkResult hk = hopcroft_karp(bv);
    if (hk.size == bv.left_size()) return std::nullopt;
    // Left vertices alternating-reachable from the unmatched ones; their
    // neighborhood is exactly the matched partners, so it is short by the
    // number of unmatched roots.
    std::vector<char> in_w(bv.left_size(), 0);
    std::queue<int> q;
    for (int i = 0; i < bv.left_size(); ++i)
        if (hk.match_left[i] < 0) {
            in_w[i] = 1;
            q.push(i);
        }
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j : bv.adj(i)) {
            int i2 = hk.match_right[j];
            if (i2 >= 0 && !in_w[i2]) {
                in_w[i2] = 1;
                q.push(i2);
            }
        }
    }
    std::vector<int> w;
    for (int i = 0; i < bv.left_size(); ++i)
        if (in_w[i]) w.push_back(bv.left()[i]);
    return w;
}

Matching saturating_matching_forced(const BipartiteView& bv, const Matching& forced) {
    std::vector<int> forced_hosts;
    for (auto [a, b] : forced.edges()) {
        bool ok = (bv.left_pos(a) >= 0 && bv.right_pos(b) >= 0) ||
                  (bv.left_pos(b) >= 0 && bv.right_pos(a) >= 0);
        if (!ok) throw GraphError("forced edge does not cross the bipartite view");
        int l = bv.left_pos(a) >= 0 ? a : b;
        int r = l == a ? b : a;
        int lp = bv.left_pos(l);
        if (!std::binary_search(bv.adj(lp).begin(), bv.adj(lp).end(), bv.right_pos(r)))
            throw GraphError("forced edge is not an edge of the view");
        forced_hosts.push_back(a);
        forced_hosts.push_back(b);
    }

    BipartiteView residual = bv.without(forced_hosts);
    HkResult hk = hopcroft_karp(residual);
    if (hk.size < residual.left_size()) {
        auto w = hall_violator(residual);
        throw HallViolation("no saturating matching: Hall's condition fails", *w);
    }
    std::vector<Edge> edges = forced.edges();
    for (int i = 0; i < residual.left_size(); ++i)
        edges.push_back(make_edge(residual.left()[i], residual.right()[hk.match_left[i]]));
    return Matching(std::move(edges));
}

}  // namespace mvc
