#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mvc/errors.hpp"

namespace mvc {

// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph over dense vertex ids 0..n-1.
// Immutable after construction; derived graphs are new values.
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes. Rejects self-loops, duplicate edges,
    // and out-of-range ids.
    static Graph build(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;

    // Induced subgraph on `vertices` (need not be sorted). Vertex i of the
    // result corresponds to the i-th smallest member; `to_host`, when given,
    // receives that correspondence.
    Graph induced(const std::vector<int>& vertices,
                  std::vector<int>* to_host = nullptr) const;

    // Graph minus a vertex set, relabeled densely.
    Graph without(const std::vector<int>& removed,
                  std::vector<int>* to_host = nullptr) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// Set of pairwise vertex-disjoint edges. Edges are normalized and sorted;
// the constructor rejects shared endpoints.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }

    // V(M), sorted ascending.
    std::vector<int> covered_vertices() const;

    bool operator==(const Matching& other) const = default;

private:
    std::vector<Edge> edges_;
};

// True iff every edge of m is an edge of g.
bool matching_in_graph(const Graph& g, const Matching& m);

enum class SpecialTag { CompleteEven, CompleteOdd, BalancedCompleteBipartite, General };

struct SpecialClass {
    SpecialTag tag = SpecialTag::General;
    // Kn order for the complete tags, side size for K(n,n).
    int order = 0;

    bool excluded() const {
        return tag == SpecialTag::CompleteEven ||
               tag == SpecialTag::BalancedCompleteBipartite;
    }
};

std::string to_string(SpecialTag tag);

enum class CutsetVerdict { Disconnected, Trivial, NotACutset };

std::string to_string(CutsetVerdict v);

struct CutsetCertificate {
    std::vector<int> removed;                        // = V(M), sorted
    std::vector<std::vector<int>> components_after;  // ordered by smallest member
    CutsetVerdict verdict = CutsetVerdict::NotACutset;

    bool is_cutset() const { return verdict != CutsetVerdict::NotACutset; }
};

// Partition into maximal connected sets, ordered by smallest member,
// each sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Components of g after deleting `removed` (host ids throughout).
std::vector<std::vector<int>> components_after_removal(const Graph& g,
                                                       const std::vector<int>& removed);

// Structural detection of the classes excluded by the theory.
// Precondition: g connected.
SpecialClass classify_special(const Graph& g);

// Removes V(m), recomputes components, assigns the verdict:
// Disconnected (>= 2 components), Trivial (one component of one vertex),
// NotACutset otherwise -- including an empty remainder.
// Throws GraphError if m is not a matching of g.
CutsetCertificate check_cutset(const Graph& g, const Matching& m);

// Canonical graphs. Names: complete, complete_bipartite, cycle, path, star,
// grid, icosahedron, k5_minus. p1/p2 carry the size parameters (star takes
// the leaf count, grid takes rows x cols).
Graph make_named(const std::string& name, int p1 = 0, int p2 = 0);

// Connected simple graph: random spanning tree first, then each remaining
// pair independently with probability edge_probability. Deterministic per seed.
Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed);

}  // namespace mvc
