#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mbcp {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Neighbor order within each list follows the first-insertion order of the
/// edge sequence the graph was built from. Every traversal in the solver
/// iterates neighbors in this order, so it is the global tie-break.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }
    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
    bool has_edge(NodeId u, NodeId v) const;

    /// Edges in insertion order, each normalized to (min, max).
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_coords() const { return !coords_.empty(); }
    std::span<const Point> coords() const { return coords_; }

private:
    friend Graph build_graph(std::size_t, std::span<const Edge>);
    friend Graph unit_disc_graph(std::span<const Point>, double);
    friend Graph attach_coords(Graph, std::span<const Point>);

    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
    std::vector<Edge> edges_;
    std::vector<Point> coords_;
};

/// Throws std::invalid_argument on out-of-range ids, self-loops and duplicate edges.
Graph build_graph(std::size_t node_count, std::span<const Edge> edges);

/// Edge (u, v) present iff squared distance <= radius^2. Edges are emitted in
/// lexicographic (u, v) order with u < v; coordinates are stored.
Graph unit_disc_graph(std::span<const Point> points, double radius);

/// Returns `g` carrying the given per-node coordinates (size must match).
Graph attach_coords(Graph g, std::span<const Point> coords);

/// Cut vertices of the subgraph induced by `nodes`, sorted ascending.
std::vector<NodeId> articulation_points(const Graph& g, std::span<const NodeId> nodes);

/// Connected and cut-vertex free. A single node counts as bi-connected,
/// two nodes and the empty set do not.
bool is_biconnected(const Graph& g, std::span<const NodeId> nodes);

/// Node sets of the bi-connected components (blocks with at least one edge)
/// of the induced subgraph. Each set is sorted; a bridge yields a 2-node set.
std::vector<std::vector<NodeId>> biconnected_components(const Graph& g,
                                                        std::span<const NodeId> nodes);

/// Connected components of the induced subgraph, each sorted ascending.
std::vector<std::vector<NodeId>> connected_components(const Graph& g,
                                                      std::span<const NodeId> nodes);

struct InstanceMeta {
    double alpha = 0.0;
    std::uint64_t seed = 0;
    std::optional<double> radius;
};

/// A problem instance: graph, one root per subgraph and the size cap.
struct Instance {
    Graph graph;
    std::vector<NodeId> roots;
    int capacity = 1;
    std::optional<std::int64_t> known_optimum;
    std::optional<InstanceMeta> meta;

    std::size_t subgraph_count() const { return roots.size(); }

    /// Throws std::invalid_argument when roots, capacity or optimum are inconsistent.
    void validate() const;
};

}  // namespace mbcp
