#pragma once

#include <optional>
#include <vector>

#include "mvc/graph.hpp"

namespace mvc {

// Maximum matching of a general graph: augmenting-path search with blossom
// contraction, greedy-seeded, deterministic (ascending id scans).
Matching maximum_matching(const Graph& g);

// Bipartite restriction of a host graph: only edges crossing (left, right)
// are retained. Vertex ids stay host ids; adjacency is by side position.
class BipartiteView {
public:
    static BipartiteView from_graph(const Graph& g, std::vector<int> left,
                                    std::vector<int> right);

    const std::vector<int>& left() const { return left_; }
    const std::vector<int>& right() const { return right_; }
    int left_size() const { return static_cast<int>(left_.size()); }
    int right_size() const { return static_cast<int>(right_.size()); }

    // Right positions adjacent to left position i, sorted.
    const std::vector<int>& adj(int i) const { return adj_[i]; }

    int left_pos(int host) const;   // -1 if absent
    int right_pos(int host) const;

    // View without the given host vertices.
    BipartiteView without(const std::vector<int>& hosts) const;

private:
    std::vector<int> left_, right_;
    std::vector<std::vector<int>> adj_;
};

struct HkResult {
    std::vector<int> match_left;   // left pos -> right pos, -1 unmatched
    std::vector<int> match_right;  // right pos -> left pos, -1 unmatched
    int size = 0;
};

// Maximum bipartite matching via Hopcroft-Karp.
HkResult hopcroft_karp(const BipartiteView& bv);

// A set W of left host ids with |N(W)| < |W| if the left side cannot be
// saturated, extracted from the final layer structure; nullopt otherwise.
std::optional<std::vector<int>> hall_violator(const BipartiteView& bv);

// Matching covering all of bv.left and containing every forced edge.
// Forced edges are honored by deleting their endpoints before augmentation.
// Throws HallViolation (with a witness among the residual left vertices)
// when no saturating matching exists.
Matching saturating_matching_forced(const BipartiteView& bv, const Matching& forced);

}  // namespace mvc
