#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mvc {

// Malformed input: bad edge lists, invalid matchings, unknown graph names.
struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Exact enumeration exceeded its node budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Hall's condition failed; `witness` is a left-side set W with |N(W)| < |W|.
struct HallViolation : std::runtime_error {
    HallViolation(const std::string& what, std::vector<int> w)
        : std::runtime_error(what), witness(std::move(w)) {}
    std::vector<int> witness;
};

// A case-analysis invariant that the algorithm relies on did not hold.
struct InternalInvariantViolation : std::runtime_error {
    explicit InternalInvariantViolation(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace mvc
