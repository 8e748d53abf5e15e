#pragma once

#include <cstdint>
#include <vector>

#include "mbcp/graph.hpp"

namespace mbcp {

inline constexpr std::int32_t kUnassigned = -1;

/// Node -> subgraph index map. Subgraph i is the one holding roots[i].
/// A single map makes the subgraphs pairwise disjoint by construction.
struct Solution {
    std::vector<std::int32_t> assignment;
    std::int64_t objective = 0;

    /// Number of assigned nodes.
    std::int64_t count_assigned() const;

    /// Sizes per subgraph for `subgraphs` subgraphs.
    std::vector<int> sizes(std::size_t subgraphs) const;

    /// Members of every subgraph in ascending node order.
    std::vector<std::vector<NodeId>> members(std::size_t subgraphs) const;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Total number of nodes covered by the subgraphs.
std::int64_t objective(const Solution& solution);

}  // namespace mbcp
