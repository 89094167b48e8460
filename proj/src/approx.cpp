#include "mvc/approx.hpp"

#include <algorithm>
#include <sstream>

#include "mvc/errors.hpp"
#include "mvc/exact.hpp"
#include "mvc/flow.hpp"

namespace mvc {

namespace {

bool in_sorted(const std::vector<int>& xs, int x) {
    return std::binary_search(xs.begin(), xs.end(), x);
}

std::vector<int> sorted_difference(std::vector<int> a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct Candidate {
    std::vector<Edge> edges;
    std::string trace;
};

std::vector<Edge> merged(std::initializer_list<const Matching*> parts) {
    std::vector<Edge> out;
    for (const Matching* m : parts) out.insert(out.end(), m->edges().begin(), m->edges().end());
    return out;
}

// Matched partner of host vertex v in m, or -1.
int partner(const Matching& m, int v) {
    for (auto [a, b] : m.edges()) {
        if (a == v) return b;
        if (b == v) return a;
    }
    return -1;
}

std::vector<Edge> minus_edge(std::vector<Edge> edges, Edge e) {
    std::erase(edges, e);
    return edges;
}

// Candidates of the |S2| >= 2 case analysis, in the order the driver should
// validate them: the case's primary output first, then the fallback-ladder
// rungs (a) and (b) where they apply.
std::vector<Candidate> case_machine(const Graph& g, const std::vector<int>& S,
                                    const Matching& m1, const std::vector<int>& s2,
                                    const std::vector<int>& U, const std::vector<int>& V) {
    std::vector<Candidate> out;

    // x matched into U, y into V; every cut vertex has neighbors on both
    // sides by minimality, so the lexicographically least picks exist.
    int x = -1, xp = -1, y = -1, yp = -1;
    for (int v : s2) {
        for (int w : g.neighbors(v))
            if (in_sorted(U, w)) {
                x = v;
                xp = w;
                break;
            }
        if (x >= 0) break;
    }
    for (int v : s2) {
        if (v == x) continue;
        for (int w : g.neighbors(v))
            if (in_sorted(V, w)) {
                y = v;
                yp = w;
                break;
            }
        if (y >= 0) break;
    }
    if (x < 0 || y < 0) return out;

    std::vector<int> uv(U);
    uv.insert(uv.end(), V.begin(), V.end());
    std::sort(uv.begin(), uv.end());
    BipartiteView bv = BipartiteView::from_graph(g, s2, uv);

    Matching m2;
    try {
        m2 = saturating_matching_forced(bv, Matching({{x, xp}, {y, yp}}));
    } catch (const HallViolation&) {
        return out;  // cannot happen for a minimum cut; ladder takes over
    }

    CaseState st = derive_case_state(g, S, m1, m2, U, V);

    auto push = [&](std::vector<Edge> edges, std::string trace) {
        out.push_back({std::move(edges), std::move(trace)});
    };

    if (!st.U2.empty() && !st.V2.empty()) {
        push(merged({&m1, &m2}), "Case1");
        return out;
    }

    // One-sided cases; `swap` mirrors Case 2 into Case 3.
    auto one_sided = [&](const std::vector<int>& far2, const Matching& m_near,
                         const Matching& m_far, const std::vector<int>& near_side,
                         const std::string& label) {
        if (far2.size() == 1) {
            push(merged({&m1, &m2}), label + ".1");
            return;
        }
        // E[A, far2]; A = S2 since M2 saturates it.
        std::vector<Edge> cross, preferred, rest;
        for (int a : st.A)
            for (int w : g.neighbors(a))
                if (in_sorted(far2, w)) cross.push_back({a, w});
        std::sort(cross.begin(), cross.end());
        for (auto e : cross) {
            int p = partner(m2, e.first);
            (in_sorted(near_side, p) ? preferred : rest).push_back(e);
        }
        if (cross.empty()) {
            push(merged({&m1, &m_far}), label + ".2-" + (label == "Case2" ? "MB" : "MA"));
        } else if (!preferred.empty()) {
            auto [a, w] = preferred.front();
            auto edges = minus_edge(merged({&m1, &m2}), make_edge(a, partner(m2, a)));
            edges.push_back(make_edge(a, w));
            push(std::move(edges), label + ".2-edge-swap");
        }
        // Ladder rung (a): M1 u M2 itself, valid when the far remainder is
        // already disconnected.
        push(merged({&m1, &m2}), "fallback-a");
        // Rung (b): every cross edge, preferred ones first.
        for (const auto& pool : {preferred, rest})
            for (auto [a, w] : pool) {
                auto edges = minus_edge(merged({&m1, &m2}), make_edge(a, partner(m2, a)));
                edges.push_back(make_edge(a, w));
                push(std::move(edges), "fallback-b");
            }
        (void)m_near;
    };

    if (st.U2.empty() && !st.V2.empty()) {
        one_sided(st.V2, st.M_A, st.M_B, U, "Case2");
        return out;
    }
    if (!st.U2.empty() && st.V2.empty()) {
        one_sided(st.U2, st.M_B, st.M_A, V, "Case3");
        return out;
    }

    // Case 4: both sides fully matched. A stable U u V would make g a
    // balanced complete bipartite graph, excluded up front; so an internal
    // edge exists on one side.
    auto internal_pair = [&](const std::vector<int>& side, const std::string& trace) {
        for (auto [a, b] : g.edges()) {
            if (!in_sorted(side, a) || !in_sorted(side, b)) continue;
            int pa = partner(m2, a), pb = partner(m2, b);
            if (pa < 0 || pb < 0) continue;
            auto edges = minus_edge(minus_edge(merged({&m1, &m2}), make_edge(a, pa)),
                                    make_edge(b, pb));
            edges.push_back(make_edge(a, b));
            push(std::move(edges), trace);
            return true;
        }
        return false;
    };
    if (!internal_pair(U, "Case4.2")) internal_pair(V, "Case4.2");
    return out;
}

}  // namespace

CaseState derive_case_state(const Graph& g, const std::vector<int>& S, const Matching& m1,
                            const Matching& m2, const std::vector<int>& U,
                            const std::vector<int>& V) {
    CaseState st;
    st.S = S;
    std::sort(st.S.begin(), st.S.end());
    st.M1 = m1;
    st.M2 = m2;
    st.U = U;
    st.V = V;
    std::sort(st.U.begin(), st.U.end());
    std::sort(st.V.begin(), st.V.end());

    st.S1 = m1.covered_vertices();
    for (int v : st.S1)
        if (!in_sorted(st.S, v))
            throw InternalInvariantViolation("M1 covers a vertex outside S");
    st.S2 = sorted_difference(st.S, st.S1);

    for (size_t i = 0; i < st.S2.size(); ++i)
        for (size_t j = i + 1; j < st.S2.size(); ++j)
            if (g.has_edge(st.S2[i], st.S2[j]))
                throw InternalInvariantViolation(
                    "S2 is not independent; M1 is not maximum in H[S]");

    std::vector<int> covered2 = m2.covered_vertices();
    st.U1 = sorted_intersection(st.U, covered2);
    st.U2 = sorted_difference(st.U, st.U1);
    st.V1 = sorted_intersection(st.V, covered2);
    st.V2 = sorted_difference(st.V, st.V1);
    st.A = sorted_intersection(st.S2, covered2);
    st.B = sorted_difference(st.S2, st.A);

    std::vector<Edge> ma, mb;
    for (auto [a, b] : m2.edges()) {
        if (in_sorted(st.U, a) || in_sorted(st.U, b)) ma.push_back({a, b});
        if (in_sorted(st.V, a) || in_sorted(st.V, b)) mb.push_back({a, b});
    }
    st.M_A = Matching(std::move(ma));
    st.M_B = Matching(std::move(mb));

    if (!m2.empty()) {
        if (!st.B.empty())
            throw InternalInvariantViolation("M2 does not saturate S2");
        if (st.M_A.empty() || st.M_B.empty())
            throw InternalInvariantViolation("forced-edge construction lost M_A or M_B");
    }
    return st;
}

std::optional<CutsetResult> approx_min_matching_vertex_cutset(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw GraphError("approx: need n >= 2");
    if (!is_connected(g)) throw GraphError("approx: graph must be connected");

    SpecialClass cls = classify_special(g);
    if (cls.excluded()) return std::nullopt;

    if (cls.tag == SpecialTag::CompleteOdd) {
        // K_{2n+1}: any n-edge matching trivializes the graph.
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < n; v += 2) edges.push_back({v, v + 1});
        Matching m(std::move(edges));
        return CutsetResult{m, check_cutset(g, m), n - 1, "complete-odd"};
    }

    VertexCut cut = min_vertex_cut(g);
    const std::vector<int>& S = cut.vertices;
    const int kappa = cut.size();

    auto comps = components_after_removal(g, S);
    size_t smallest = 0;
    for (size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() < comps[smallest].size()) smallest = i;
    std::vector<int> U = comps[smallest], V;
    for (size_t i = 0; i < comps.size(); ++i)
        if (i != smallest) V.insert(V.end(), comps[i].begin(), comps[i].end());
    std::sort(V.begin(), V.end());

    std::vector<int> to_host;
    Matching m1_local = maximum_matching(g.induced(S, &to_host));
    std::vector<Edge> m1_edges;
    for (auto [a, b] : m1_local.edges()) m1_edges.push_back(make_edge(to_host[a], to_host[b]));
    Matching m1(std::move(m1_edges));

    auto finish = [&](const Matching& m, std::string trace) -> std::optional<CutsetResult> {
        CutsetCertificate cert = check_cutset(g, m);
        if (!cert.is_cutset()) return std::nullopt;
        return CutsetResult{m, std::move(cert), kappa, std::move(trace)};
    };

    auto try_candidates = [&](const std::vector<Candidate>& cands)
        -> std::optional<CutsetResult> {
        for (const auto& c : cands) {
            try {
                if (auto r = finish(Matching(c.edges), c.trace)) return r;
            } catch (const GraphError&) {
                // overlapping candidate edges: not a matching, skip
            }
        }
        return std::nullopt;
    };

    std::vector<int> s2 = sorted_difference(S, m1.covered_vertices());

    if (s2.empty()) {
        return finish(m1, "M1-covers-S");  // removing all of S disconnects
    }

    if (s2.size() == 1) {
        int x = s2[0];
        std::vector<Candidate> cands;
        std::vector<int> u_nbrs, v_nbrs;
        for (int w : g.neighbors(x)) {
            if (in_sorted(U, w)) u_nbrs.push_back(w);
            if (in_sorted(V, w)) v_nbrs.push_back(w);
        }
        auto with = [&](int xp, std::string trace) {
            auto edges = m1.edges();
            edges.push_back(make_edge(x, xp));
            cands.push_back({std::move(edges), std::move(trace)});
        };
        if (U.size() >= 2) {
            if (!u_nbrs.empty()) with(u_nbrs.front(), "S2-singleton");
            if (!v_nbrs.empty()) with(v_nbrs.front(), "fallback-b");
        } else {
            if (!v_nbrs.empty()) with(v_nbrs.front(), "S2-singleton");
            if (!u_nbrs.empty()) with(u_nbrs.front(), "fallback-b");
        }
        if (auto r = try_candidates(cands)) return r;
    } else {
        if (auto r = try_candidates(case_machine(g, S, m1, s2, U, V))) return r;
        // Ladder rung (c): swap the roles of U and V and rerun.
        auto swapped = case_machine(g, S, m1, s2, V, U);
        for (auto& c : swapped) c.trace = "fallback-c";
        if (auto r = try_candidates(swapped)) return r;
    }

    // Ladder rung (d): exhaustive search up to |S|.
    ExactAnswer ex = exact_min_matching_vertex_cutset_up_to(g, kappa);
    if (ex.found()) return finish(ex.witness, "fallback-d");

    std::ostringstream why;
    why << "approx: all fallback rungs failed (n=" << n << ", m=" << g.edge_count()
        << ", kappa=" << kappa << ", |S2|=" << s2.size() << ")";
    throw InternalInvariantViolation(why.str());
}

}  // namespace mvc
