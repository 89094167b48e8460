#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvc/graph.hpp"

namespace mvc {

// Stacked (Apollonian-style) triangulation: planar by construction,
// m = 3n-6, 2n-4 triangular faces.
struct Triangulation {
    Graph graph;
    std::vector<std::array<int, 3>> faces;
};

// Start from a triangle, repeatedly insert a new vertex into a uniformly
// random face and join it to the three corners. Deterministic per seed.
Triangulation random_maximal_planar(int n, std::uint64_t seed);

// Triangulate, then delete random edges down to target_m, rejecting
// deletions that disconnect. Requires n-1 <= target_m <= 3n-6.
Graph random_connected_planar(int n, int target_m, std::uint64_t seed);

struct GraphRecord {
    std::string name;           // fixture name or "maximal-planar-<i>" etc.
    int n = 0, m = 0;
    int min_degree = 0;
    int kappa = 0;
    std::optional<int> kappa_m;  // nullopt: no matching vertex-cutset
    std::string special_class;
    bool excluded_class = false;
    std::vector<std::string> failed_checks;
};

struct SuiteReport {
    std::string description;
    std::uint64_t seed = 0;
    int count = 0;
    int n_min = 0, n_max = 0;
    std::vector<GraphRecord> records;
    std::vector<std::string> violations;      // empty iff every check passed
    std::vector<std::string> tight_examples;  // graphs meeting a bound exactly

    bool passed() const { return violations.empty(); }
};

// Bound checks over generated planar corpora plus the two fixed fixtures
// (icosahedron, K5 minus an edge):
//   - maximal planar, n >= 5:  2 <= kappa_M <= 3 and kappa_M <= delta
//   - connected planar outside the excluded classes:  kappa_M <= 3
// `count` graphs of each corpus; maximal planar n in [n_min, n_max],
// connected planar n in [n_min, min(n_max, 10)].
SuiteReport run_planar_suite(int count, int n_min, int n_max, std::uint64_t seed);

}  // namespace mvc
