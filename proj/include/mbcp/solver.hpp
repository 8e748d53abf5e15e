#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "mbcp/ear_growth.hpp"
#include "mbcp/graph.hpp"
#include "mbcp/rng.hpp"
#include "mbcp/solution.hpp"

namespace mbcp {

struct SolverConfig {
    double p0 = 0.5;
    int max_exp_length = 12;
    int regrow_size = 9;
    int max_iterations = 10000;
    int stagnation_limit = 2000;
    std::uint64_t seed = 0;
    int grow_n_attempts = 50;

    /// Throws std::invalid_argument for non-positive limits or p0 outside [0, 1].
    void validate() const;
};

/// Grows all subgraphs of an instance in parallel and returns the resulting
/// assignment.
///
/// Rng consumption per round, in order: the expansion length MaxL from
/// [2, max_exp_length], then the index of the subgraph among those still
/// expandable, then one draw per valid ear inside the growth. A subgraph is
/// retired once its queue is exhausted or it reaches capacity, and is never
/// picked again.
Solution generate_solution(const Instance& instance, const SolverConfig& config, Rng& rng);

/// The parallel growth behind generate_solution, restricted to `pool` and to
/// the listed subgraph indices. Writes the grown subgraphs into `assignment`
/// (entries of pool nodes are overwritten only for nodes that end up in a
/// subgraph).
void grow_subgraphs(const Instance& instance, std::shared_ptr<const NodePool> pool,
                    std::span<const int> subgraphs, const SolverConfig& config, Rng& rng,
                    std::vector<std::int32_t>& assignment);

}  // namespace mbcp
