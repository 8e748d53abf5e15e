#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbcp/graph.hpp"
#include "mbcp/solution.hpp"

namespace mbcp {

enum class ViolationKind { RootCount, Capacity, Overlap, Biconnectivity };

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    int subgraph = -1;
    std::string detail;
};

struct VerifyReport {
    std::vector<Violation> violations;
    std::int64_t objective = 0;
    bool feasible() const { return violations.empty(); }
};

/// Checks every subgraph: it holds exactly its own root, at most `capacity`
/// nodes, and induces a bi-connected subgraph (a lone root is accepted).
/// Throws std::invalid_argument when the assignment length or a subgraph
/// index is out of range.
VerifyReport verify_solution(const Instance& instance, const Solution& solution);

/// Largest node count oracle limit for brute_force_optimum.
inline constexpr std::size_t kOracleMaxNodes = 16;

class OracleSizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact optimum by exhaustive search over all feasible subgraphs per root.
/// Refuses instances above kOracleMaxNodes nodes with OracleSizeError.
std::int64_t brute_force_optimum(const Instance& instance);

}  // namespace mbcp
