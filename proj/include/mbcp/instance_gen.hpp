#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbcp/graph.hpp"
#include "mbcp/rng.hpp"
#include "mbcp/solution.hpp"

namespace mbcp {

struct GenConfig {
    int n = 5;            ///< number of blocks (roots)
    int m = 10;           ///< block size, the capacity M
    double alpha = 2.0;   ///< density; disc radius is 1 / sqrt(alpha n M)
    double delta = 1.1;   ///< sampled points per block node
    double gamma = 0.2;   ///< cross-edge fraction for MinCon
    int position_trials = 1000;
    std::uint64_t seed = 0;
    int block_attempts = 100000;
    int placement_restarts = 50;
    /// Box shrink applied after every `shrink_every` rejected block samples.
    int shrink_every = 25;
    double shrink_factor = 0.95;

    void validate() const;
    double radius() const;
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One bi-connected block of exactly M nodes in local coordinates.
struct Block {
    std::vector<Point> points;  ///< inside [0, width] x [0, height]
    Graph graph;                ///< disc graph of `points`
    NodeId root = 0;
    double width = 0.0;
    double height = 0.0;
    double scale = 1.0;  ///< linear shrink of the nominal box that produced it
    int attempts = 0;
};

/// Rejection-samples ceil(M delta) points in a box of nominal area 1/n until
/// the disc graph holds a bi-connected component of at least M nodes, then
/// trims it to M nodes. `start_scale` lets consecutive calls resume from the
/// last successful shrink. Throws GenerationError when the budget runs out.
Block generate_block(const GenConfig& cfg, Rng& rng, double start_scale = 1.0);

struct GeneratedInstance {
    Instance instance;
    std::vector<std::int32_t> block_membership;
    /// Cross edges of every block at its placement, block 0 included as 0.
    std::vector<int> placement_cross_edges;

    /// blockMembership as a Solution.
    Solution certificate() const;
};

/// MinCon for a block with `block_edges` internal edges.
int min_connections(const GenConfig& cfg, std::size_t block_edges);

/// Places the blocks one by one in the unit square and relabels nodes at random.
GeneratedInstance assemble_instance(const std::vector<Block>& blocks, const GenConfig& cfg, Rng& rng);

/// Full pipeline from cfg.seed. knownOptimum is n M.
GeneratedInstance generate_instance(const GenConfig& cfg);

struct ReducedInstance {
    Instance instance;
    std::int64_t oracle_value = 0;
};

/// Star supply/demand problem as a single-root instance: root r joined to s
/// and e, one path s - n_{i,1} - ... - n_{i,d_i} per demand and an edge from
/// e to each path end. Capacity is sup + 3.
ReducedInstance reduce_mpgsd_star(int sup, std::span<const int> demands);

}  // namespace mbcp
