#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvc/graph.hpp"
#include "mvc/matching.hpp"

namespace mvc {

struct CutsetResult {
    Matching matching;
    CutsetCertificate certificate;
    int kappa = 0;            // size of the minimum vertex cut used
    std::string case_trace;   // which case/subcase produced the output
};

// Working state of the case analysis, exposed for diagnosis and testing.
struct CaseState {
    std::vector<int> S, S1, S2;
    std::vector<int> U, V;
    Matching M1, M2;
    std::vector<int> U1, U2, V1, V2, A, B;
    Matching M_A, M_B;
};

// Partitions derived from (S, M1, M2, U, V); asserts every structural
// invariant (S2 independent, A = S2, M_A/M_B nonempty) and throws
// InternalInvariantViolation when one fails.
CaseState derive_case_state(const Graph& g, const std::vector<int>& S, const Matching& m1,
                            const Matching& m2, const std::vector<int>& U,
                            const std::vector<int>& V);

// The 2-approximation: turns a minimum vertex cut S into a matching
// vertex-cutset of size <= |S| = kappa(g). Returns nullopt exactly for the
// excluded classes K_{2n} and K_{n,n}, which have no matching vertex-cutset.
// Preconditions: g connected, n >= 2.
std::optional<CutsetResult> approx_min_matching_vertex_cutset(const Graph& g);

}  // namespace mvc
