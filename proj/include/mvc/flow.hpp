#pragma once

#include <optional>
#include <vector>

#include "mvc/graph.hpp"

namespace mvc {

struct VertexCut {
    enum class Kind { ProperCut, CompleteGraphConvention };
    std::vector<int> vertices;  // sorted
    Kind kind = Kind::ProperCut;

    int size() const { return static_cast<int>(vertices.size()); }
};

// Minimum-size vertex set disjoint from {s,t} separating s from t, via
// unit-capacity max-flow on the vertex-split network (Menger). Throws
// GraphError if s and t are adjacent or equal.
std::vector<int> min_st_vertex_cut(const Graph& g, int s, int t);

// As above, but gives up and returns nullopt once the flow value reaches
// `bound` (the cut can no longer beat a known one of that size).
std::optional<std::vector<int>> min_st_vertex_cut_bounded(const Graph& g, int s, int t,
                                                          int bound);

// Global minimum vertex cut of a connected graph, |result| = kappa(g).
// Complete graphs get the n-1 convention. Fixes a minimum-degree vertex s and
// scans s against all non-neighbors, and each neighbor of s against its
// non-neighbors; some minimum cut misses s or one of its neighbors, so the
// scan is exhaustive.
VertexCut min_vertex_cut(const Graph& g);

}  // namespace mvc
