#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbcp/graph.hpp"
#include "mbcp/rng.hpp"
#include "mbcp/solution.hpp"
#include "mbcp/solver.hpp"

namespace mbcp {

/// How the set of subgraphs to regrow is chosen.
enum class RegrowMode {
    Random,    ///< one underfull subgraph, one touching a non-located node, the rest at random
    Neighbor,  ///< a connected set in the subgraph neighborhood graph
};

std::string to_string(RegrowMode mode);

/// Graph over subgraph indices. `direct` links subgraphs joined by an edge of
/// the instance graph; `nonloc` links subgraphs joined by a path whose inner
/// nodes are all non-located (at least one inner node). Pairs are (i, j) with
/// i < j, sorted.
struct NeighborGraph {
    std::size_t subgraph_count = 0;
    std::vector<std::pair<int, int>> direct;
    std::vector<std::pair<int, int>> nonloc;
    std::vector<std::pair<int, int>> all;
    std::vector<std::vector<int>> adjacency;
    /// frontier(S_i) contains a non-located node.
    std::vector<char> touches_nonloc;
};

struct RegrowSet {
    std::vector<int> members;
    std::size_t size() const { return members.size(); }
};

/// Unassigned nodes, ascending.
std::vector<NodeId> nonlocated(const Instance& instance, const Solution& solution);

/// Nodes outside S_i adjacent to some node of S_i, ascending.
std::vector<NodeId> subgraph_frontier(const Instance& instance, const Solution& solution, int i);

NeighborGraph build_neighbor_graph(const Instance& instance, const Solution& solution);

/// Chooses the subgraphs to regrow, starting from `seed` (an underfull
/// subgraph). When `seed` is empty one is drawn uniformly among underfull
/// subgraphs. Returns nullopt when no valid set exists.
std::optional<RegrowSet> select_regrow_set(const Instance& instance, const Solution& solution,
                                           const NeighborGraph& neighbors, int m, RegrowMode mode,
                                           const SolverConfig& config, Rng& rng,
                                           std::optional<int> seed = std::nullopt);

/// Clears the subgraphs in `set` and regrows them over their own nodes plus the
/// non-located ones. All other subgraphs are copied unchanged.
Solution regrow_partial(const Instance& instance, const Solution& best, const RegrowSet& set,
                        const SolverConfig& config, Rng& rng);

struct LocalSearchStats {
    std::int64_t best_objective = 0;
    std::int64_t iterations = 0;         ///< generated solutions, the initial one included
    std::int64_t iteration_of_best = 0;  ///< iteration of the last strict improvement
    double wall_millis = 0.0;
    double millis_to_best = 0.0;
    std::uint64_t seed = 0;
    RegrowMode mode = RegrowMode::Neighbor;
};

struct LocalSearchResult {
    Solution best;
    LocalSearchStats stats;
    /// Objective after every accepted candidate, starting with the initial solution.
    std::vector<std::int64_t> best_trace;
};

/// Receives every generated candidate (the initial solution included).
using CandidateObserver = std::function<void(const Solution&)>;

/// Regrow-and-accept loop seeded by generate_solution. Candidates with an
/// objective at least equal to the best replace it. Stops after
/// max_iterations generated solutions, after stagnation_limit consecutive
/// iterations without a strict improvement, or when no subgraph can grow.
LocalSearchResult local_search(const Instance& instance, const SolverConfig& config, RegrowMode mode,
                               const CandidateObserver& observer = {});

}  // namespace mbcp
