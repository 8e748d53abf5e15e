#include "mbcp/ear_growth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mbcp {

std::shared_ptr<const NodePool> NodePool::all(std::size_t node_count) {
    auto pool = std::make_shared<NodePool>();
    pool->nodes_.resize(node_count);
    pool->local_.resize(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        pool->nodes_[i] = static_cast<NodeId>(i);
        pool->local_[i] = static_cast<std::int32_t>(i);
    }
    return pool;
}

std::shared_ptr<const NodePool> NodePool::of(std::size_t node_count, std::vector<NodeId> nodes) {
    auto pool = std::make_shared<NodePool>();
    pool->local_.assign(node_count, -1);
    pool->nodes_.reserve(nodes.size());
    for (NodeId u : nodes) {
        if (u < 0 || static_cast<std::size_t>(u) >= node_count)
            throw std::invalid_argument("pool node out of range: " + std::to_string(u));
        if (pool->local_[u] >= 0) continue;
        pool->local_[u] = static_cast<std::int32_t>(pool->nodes_.size());
        pool->nodes_.push_back(u);
    }
    return pool;
}

GrowthState::GrowthState(const Graph& graph, NodeId root, int capacity, double p0,
                         std::shared_ptr<const NodePool> pool)
    : graph_(&graph),
      pool_(pool ? std::move(pool) : NodePool::all(graph.node_count())),
      root_(root),
      capacity_(capacity),
      p0_(p0) {
    if (root < 0 || static_cast<std::size_t>(root) >= graph.node_count() || !pool_->contains(root))
        throw std::invalid_argument("growth root is not an eligible node");
    if (capacity < 1) throw std::invalid_argument("capacity must be at least 1");
    if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 must lie in [0, 1]");

    slots_.resize(pool_->size());
    const std::int32_t r = pool_->local(root);
    slots_[r].in_s = true;
    slots_[r].dist = 0;
    slots_[r].ear_root = r;
    members_.push_back(root);
    for (NodeId w : graph.neighbors(root)) {
        std::int32_t l = pool_->local(w);
        if (l < 0) continue;
        attach(l, r);
        slots_[l].ear_root = l;
        slots_[l].dist = 0;
        queue_.push_back(l);
    }
}

void GrowthState::attach(std::int32_t child, std::int32_t parent) {
    Slot& c = slots_[child];
    Slot& p = slots_[parent];
    c.parent = parent;
    c.next_sibling = -1;
    c.prev_sibling = p.last_child;
    if (p.last_child >= 0)
        slots_[p.last_child].next_sibling = child;
    else
        p.first_child = child;
    p.last_child = child;
}

void GrowthState::detach(std::int32_t child) {
    Slot& c = slots_[child];
    if (c.parent < 0) return;
    Slot& p = slots_[c.parent];
    if (c.prev_sibling >= 0)
        slots_[c.prev_sibling].next_sibling = c.next_sibling;
    else
        p.first_child = c.next_sibling;
    if (c.next_sibling >= 0)
        slots_[c.next_sibling].prev_sibling = c.prev_sibling;
    else
        p.last_child = c.prev_sibling;
    c.parent = c.next_sibling = c.prev_sibling = -1;
}

std::uint32_t GrowthState::distance_to_s_local(std::int32_t i) const {
    const Slot& s = slots_[i];
    return s.dist + (slots_[s.ear_root].in_s ? 0u : 1u);
}

std::uint32_t GrowthState::distance_to_s(NodeId u) const {
    std::int32_t l = pool_->local(u);
    if (l < 0 || !slots_[l].available || !in_tree(l)) return kInfDist;
    return distance_to_s_local(l);
}

bool GrowthState::in_s(NodeId u) const {
    std::int32_t l = pool_->local(u);
    return l >= 0 && slots_[l].in_s;
}

std::optional<Ear> GrowthState::make_ear(std::int32_t c, std::int32_t u) const {
    const Slot& a = slots_[c];
    const Slot& b = slots_[u];
    if (a.in_s && b.in_s) return std::nullopt;
    if (a.ear_root == b.ear_root) return std::nullopt;
    const std::uint64_t fresh = std::uint64_t{distance_to_s_local(c)} + distance_to_s_local(u);
    if (members_.size() + fresh > static_cast<std::uint64_t>(capacity_)) return std::nullopt;

    Ear ear;
    std::vector<std::int32_t> up;
    for (std::int32_t x = c;; x = slots_[x].parent) {
        up.push_back(x);
        if (x == a.ear_root) break;
    }
    const bool first_ear = !slots_[a.ear_root].in_s;
    if (first_ear) ear.sequence.push_back(root_);
    for (auto it = up.rbegin(); it != up.rend(); ++it) ear.sequence.push_back(pool_->global(*it));
    for (std::int32_t x = u;; x = slots_[x].parent) {
        ear.sequence.push_back(pool_->global(x));
        if (x == b.ear_root) break;
    }
    ear.closed = first_ear;
    for (NodeId g : ear.sequence)
        if (!slots_[pool_->local(g)].in_s) ear.fresh.push_back(g);
    return ear;
}

std::optional<Ear> GrowthState::try_make_ear(NodeId u, NodeId v) const {
    const std::int32_t lu = pool_->local(u);
    const std::int32_t lv = pool_->local(v);
    if (lu < 0 || lv < 0 || lu == lv) return std::nullopt;
    const Slot& a = slots_[lu];
    const Slot& b = slots_[lv];
    if (!a.available || !b.available || !in_tree(lu) || !in_tree(lv)) return std::nullopt;
    if (a.parent == lv || b.parent == lu || !graph_->has_edge(u, v)) return std::nullopt;
    return make_ear(lu, lv);
}

std::optional<Ear> GrowthState::grow_single_ear(Rng& rng) {
    while (!queue_.empty() && members_.size() < static_cast<std::size_t>(capacity_)) {
        const std::int32_t c = queue_.front();
        queue_.pop_front();
        Slot& cs = slots_[c];
        // A node farther than the remaining capacity cannot close an ear.
        const auto remaining = static_cast<std::uint32_t>(capacity_ - static_cast<int>(members_.size()));
        if (!cs.available || !cs.eval || cs.dist == kInfDist || cs.dist > remaining) continue;

        std::optional<Ear> accepted;
        for (NodeId w : graph_->neighbors(pool_->global(c))) {
            const std::int32_t l = pool_->local(w);
            if (l < 0) continue;
            Slot& ws = slots_[l];
            if (!ws.available) continue;
            if (!in_tree(l)) {
                attach(l, c);
                ws.ear_root = cs.ear_root;
                ws.dist = cs.dist + 1;
                ws.eval = true;
                queue_.push_back(l);
                continue;
            }
            if (ws.parent == c || cs.parent == l) continue;
            auto ear = make_ear(c, l);
            if (!ear) continue;
            if (rng.unit() > p0_) continue;
            accepted = std::move(ear);
            break;
        }
        if (accepted) {
            // c is an ear node, so update_add_ear re-enqueues it with eval set;
            // its remaining neighbors are scanned on that visit.
            update_add_ear(*accepted);
            notify();
            return accepted;
        }
        cs.eval = false;
        notify();
    }
    return std::nullopt;
}

std::size_t GrowthState::grow_to_capacity(Rng& rng) {
    std::size_t added = 0;
    while (auto ear = grow_single_ear(rng)) added += ear->fresh.size();
    return added;
}

std::size_t GrowthState::grow(GrowMode mode, Rng& rng) {
    if (mode == GrowMode::ToCapacity) return grow_to_capacity(rng);
    auto ear = grow_single_ear(rng);
    return ear ? ear->fresh.size() : 0;
}

void GrowthState::update_add_ear(const Ear& ear) {
    for (NodeId g : ear.fresh) {
        Slot& s = slots_[pool_->local(g)];
        if (!s.in_s) {
            s.in_s = true;
            members_.push_back(g);
        }
    }
    if (members_.size() > static_cast<std::size_t>(capacity_))
        throw std::logic_error("ear exceeds the subgraph capacity");

    std::vector<std::int32_t> order;
    order.reserve(ear.sequence.size());
    for (NodeId g : ear.sequence) {
        const std::int32_t l = pool_->local(g);
        if (std::find(order.begin(), order.end(), l) != order.end()) continue;
        Slot& s = slots_[l];
        s.dist = 0;
        s.ear_root = l;
        s.eval = true;
        queue_.push_back(l);
        order.push_back(l);
    }
    // Level order below the ear: shorter potential ears are queued first.
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::int32_t x = order[k];
        for (std::int32_t ch = slots_[x].first_child; ch >= 0; ch = slots_[ch].next_sibling) {
            Slot& cs = slots_[ch];
            if (cs.in_s) continue;
            cs.ear_root = slots_[x].ear_root;
            cs.dist = slots_[x].dist + 1;
            cs.eval = true;
            queue_.push_back(ch);
            order.push_back(ch);
        }
    }
}

void GrowthState::remove_nodes(std::span<const NodeId> nodes) {
    std::vector<std::int32_t> stack;
    for (NodeId g : nodes) {
        const std::int32_t l = pool_->local(g);
        if (l < 0) continue;
        Slot& s = slots_[l];
        if (!s.available) continue;
        if (s.in_s) throw std::logic_error("cannot remove a node that belongs to this subgraph");
        s.available = false;
        if (!in_tree(l)) continue;

        // Ancestors may hold same-root back edges that were skipped; they can
        // now reconnect the detached branch.
        if (s.ear_root != l) {
            for (std::int32_t a = s.parent; a >= 0; a = slots_[a].parent) {
                if (!slots_[a].eval) {
                    slots_[a].eval = true;
                    queue_.push_back(a);
                }
                if (a == s.ear_root) break;
            }
        }
        detach(l);
        stack.assign(1, l);
        while (!stack.empty()) {
            const std::int32_t x = stack.back();
            stack.pop_back();
            for (std::int32_t ch = slots_[x].first_child; ch >= 0; ch = slots_[ch].next_sibling)
                stack.push_back(ch);
            Slot& xs = slots_[x];
            xs.parent = xs.first_child = xs.last_child = xs.next_sibling = xs.prev_sibling = -1;
            xs.dist = kInfDist;
            xs.ear_root = -1;
            xs.eval = true;
        }
    }
}

NodeState GrowthState::node(NodeId u) const {
    NodeState out;
    const std::int32_t l = pool_->local(u);
    if (l < 0) {
        out.available = false;
        return out;
    }
    const Slot& s = slots_[l];
    if (s.parent >= 0) out.parent = pool_->global(s.parent);
    for (std::int32_t ch = s.first_child; ch >= 0; ch = slots_[ch].next_sibling)
        out.children.push_back(pool_->global(ch));
    if (s.ear_root >= 0) out.ear_root = pool_->global(s.ear_root);
    out.dist = s.dist;
    out.eval = s.eval;
    out.available = s.available;
    out.in_s = s.in_s;
    return out;
}

std::vector<NodeId> GrowthState::queue() const {
    std::vector<NodeId> out;
    out.reserve(queue_.size());
    for (std::int32_t l : queue_) out.push_back(pool_->global(l));
    return out;
}

}  // namespace mbcp
