#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mbcp/graph.hpp"
#include "mbcp/rng.hpp"

namespace mbcp {

/// Distance sentinel for nodes outside the BFS tree; larger than any node count.
inline constexpr std::uint32_t kInfDist = std::numeric_limits<std::uint32_t>::max();

/// The subset of graph nodes a growth may touch, with dense local ids.
/// Nodes outside the pool behave as permanently unavailable.
class NodePool {
public:
    static std::shared_ptr<const NodePool> all(std::size_t node_count);
    static std::shared_ptr<const NodePool> of(std::size_t node_count, std::vector<NodeId> nodes);

    std::size_t size() const { return nodes_.size(); }
    std::int32_t local(NodeId u) const { return local_[u]; }
    NodeId global(std::int32_t i) const { return nodes_[i]; }
    bool contains(NodeId u) const { return local_[u] >= 0; }

private:
    std::vector<NodeId> nodes_;
    std::vector<std::int32_t> local_;
};

/// One open ear accepted into S.
struct Ear {
    /// Endpoint to endpoint along the ear. For the first ear (a cycle through
    /// the root) the sequence starts at the root and closes back onto it.
    std::vector<NodeId> sequence;
    /// Nodes that were not in S before the ear; the ear's size contribution.
    std::vector<NodeId> fresh;
    bool closed = false;
};

/// Read-only snapshot of a node's bookkeeping in one growth.
struct NodeState {
    std::optional<NodeId> parent;
    std::vector<NodeId> children;
    std::optional<NodeId> ear_root;
    std::uint32_t dist = kInfDist;
    bool eval = true;
    bool available = true;
    bool in_s = false;
};

enum class GrowMode { ToCapacity, SingleEar };

/// Grows one bi-connected node set S around a root by attaching open ears
/// discovered through an adapted BFS.
///
/// Every node in the BFS tree tracks its ear root (first ancestor in S) and
/// `dist`, the number of nodes on its tree path up to but excluding that ear
/// root. `dist` is the length of a path that exists in the graph, so it never
/// underestimates the true distance to S. Before the first ear, the root's
/// neighbors act as their own ear roots with dist 0.
///
/// A back edge (c, u) yields an ear when the two ear roots differ and the ear's
/// fresh nodes fit under the capacity. Valid ears are accepted with
/// probability p0, consuming one Rng::unit() draw each; a rejected ear leaves
/// the state untouched and can be found again later.
class GrowthState {
public:
    using Observer = std::function<void(const GrowthState&)>;

    /// S = {root}; the root's pool neighbors are enqueued in adjacency order.
    GrowthState(const Graph& graph, NodeId root, int capacity, double p0,
                std::shared_ptr<const NodePool> pool = nullptr);

    /// Ear for back edge (u, v) if the ear roots differ and the size cap holds.
    /// Returns nullopt for tree edges, nodes outside the tree or unavailable nodes.
    std::optional<Ear> try_make_ear(NodeId u, NodeId v) const;

    /// Runs the BFS until one ear is accepted (returned) or the queue is exhausted.
    std::optional<Ear> grow_single_ear(Rng& rng);

    /// Repeats grow_single_ear until |S| = capacity or no ear can be found.
    /// Returns the number of nodes added.
    std::size_t grow_to_capacity(Rng& rng);

    std::size_t grow(GrowMode mode, Rng& rng);

    /// Adds the ear's fresh nodes to S and refreshes ear roots and distances
    /// below every ear node, re-enqueueing them level by level.
    void update_add_ear(const Ear& ear);

    /// Marks `nodes` unavailable (taken elsewhere), detaches them from the
    /// BFS tree, resets their descendants to undiscovered and re-enqueues
    /// already-evaluated ancestors up to the ear root.
    void remove_nodes(std::span<const NodeId> nodes);

    /// Called after every dequeued node is processed and after each accepted ear.
    void set_observer(Observer observer) { observer_ = std::move(observer); }

    NodeId root() const { return root_; }
    int capacity() const { return capacity_; }
    double accept_probability() const { return p0_; }
    std::size_t size() const { return members_.size(); }
    /// S in insertion order.
    const std::vector<NodeId>& members() const { return members_; }
    bool in_s(NodeId u) const;
    bool in_pool(NodeId u) const { return pool_->contains(u); }
    bool can_expand() const { return size() < static_cast<std::size_t>(capacity_) && !queue_.empty(); }
    NodeState node(NodeId u) const;
    std::vector<NodeId> queue() const;
    const Graph& graph() const { return *graph_; }

    /// Fresh nodes u's side of an ear would contribute: dist, plus one while
    /// its ear root is not yet in S (before the first ear). kInfDist outside the tree.
    std::uint32_t distance_to_s(NodeId u) const;

private:
    struct Slot {
        std::int32_t parent = -1;
        std::int32_t first_child = -1;
        std::int32_t last_child = -1;
        std::int32_t next_sibling = -1;
        std::int32_t prev_sibling = -1;
        std::int32_t ear_root = -1;
        std::uint32_t dist = kInfDist;
        bool eval = true;
        bool available = true;
        bool in_s = false;
    };

    bool in_tree(std::int32_t i) const { return slots_[i].dist != kInfDist; }
    std::uint32_t distance_to_s_local(std::int32_t i) const;
    std::optional<Ear> make_ear(std::int32_t c, std::int32_t u) const;
    void attach(std::int32_t child, std::int32_t parent);
    void detach(std::int32_t child);
    void notify() const {
        if (observer_) observer_(*this);
    }

    const Graph* graph_;
    std::shared_ptr<const NodePool> pool_;
    NodeId root_;
    int capacity_;
    double p0_;
    std::vector<Slot> slots_;
    std::deque<std::int32_t> queue_;
    std::vector<NodeId> members_;
    Observer observer_;
};

}  // namespace mbcp
