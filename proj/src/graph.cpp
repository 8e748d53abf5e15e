#include "mbcp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mbcp {

namespace {

// Induced subgraph with dense local ids (position in the sorted node list).
class Induced {
public:
    Induced(const Graph& g, std::span<const NodeId> nodes) : nodes_(nodes.begin(), nodes.end()) {
        std::sort(nodes_.begin(), nodes_.end());
        nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
        offsets_.assign(nodes_.size() + 1, 0);
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            NodeId u = nodes_[i];
            if (u < 0 || static_cast<std::size_t>(u) >= g.node_count())
                throw std::invalid_argument("node id out of range: " + std::to_string(u));
            for (NodeId w : g.neighbors(u)) {
                int lw = local(w);
                if (lw >= 0) targets_.push_back(lw);
            }
            offsets_[i + 1] = targets_.size();
        }
    }

    int size() const { return static_cast<int>(nodes_.size()); }
    NodeId global(int i) const { return nodes_[i]; }
    std::span<const int> adj(int i) const {
        return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
    }

private:
    int local(NodeId u) const {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), u);
        return (it != nodes_.end() && *it == u) ? static_cast<int>(it - nodes_.begin()) : -1;
    }

    std::vector<NodeId> nodes_;
    std::vector<std::size_t> offsets_;
    std::vector<int> targets_;
};

// Iterative low-link DFS. Calls on_block(nodes) for every bi-connected block
// when collect_blocks is set, and marks cut vertices in `cut`.
template <class OnBlock>
void lowlink_dfs(const Induced& h, std::vector<char>& cut, bool collect_blocks, OnBlock&& on_block) {
    const int n = h.size();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> pos(n, 0);
    std::vector<int> stack;
    std::vector<std::pair<int, int>> edge_stack;
    cut.assign(n, 0);
    int time = 0;
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        disc[s] = low[s] = time++;
        int root_children = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            auto nbrs = h.adj(v);
            if (pos[v] < nbrs.size()) {
                int w = nbrs[pos[v]++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    disc[w] = low[w] = time++;
                    if (v == s) ++root_children;
                    if (collect_blocks) edge_stack.emplace_back(v, w);
                    stack.push_back(w);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                    if (collect_blocks && disc[w] < disc[v]) edge_stack.emplace_back(v, w);
                }
                continue;
            }
            stack.pop_back();
            int p = parent[v];
            if (p == -1) continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                if (p != s) cut[p] = 1;
                if (collect_blocks) {
                    std::vector<NodeId> block;
                    while (!edge_stack.empty()) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(h.global(e.first));
                        block.push_back(h.global(e.second));
                        if (e.first == p && e.second == v) break;
                    }
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    on_block(std::move(block));
                }
            }
        }
        if (root_children > 1) cut[s] = 1;
    }
}

}  // namespace

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nbrs = neighbors(u);
    return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

Graph build_graph(std::size_t node_count, std::span<const Edge> edges) {
    std::vector<std::uint64_t> keys;
    keys.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= node_count ||
            static_cast<std::size_t>(v) >= node_count)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") references a node outside 0.." +
                                        std::to_string(node_count));
        if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
        auto a = static_cast<std::uint64_t>(std::min(u, v));
        auto b = static_cast<std::uint64_t>(std::max(u, v));
        keys.push_back((a << 32) | b);
    }
    std::sort(keys.begin(), keys.end());
    auto dup = std::adjacent_find(keys.begin(), keys.end());
    if (dup != keys.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(*dup >> 32) + "," +
                                    std::to_string(*dup & 0xffffffffu) + ")");

    Graph g;
    g.offsets_.assign(node_count + 1, 0);
    for (auto [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(2 * edges.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    return g;
}

Graph unit_disc_graph(std::span<const Point> points, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("unit disc radius must be positive");
    const std::size_t n = points.size();
    std::vector<Edge> edges;
    if (n > 0) {
        double min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
        for (const auto& p : points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        // Cells are at least `radius` wide so a 3x3 neighborhood covers every candidate.
        const double limit = 2.0 * std::sqrt(static_cast<double>(n)) + 1.0;
        const double extent = std::max(max_x - min_x, max_y - min_y);
        const double cell = std::max(radius, extent / limit);
        const auto cols = static_cast<std::size_t>((max_x - min_x) / cell) + 1;
        const auto rows = static_cast<std::size_t>((max_y - min_y) / cell) + 1;
        auto cell_of = [&](const Point& p) {
            auto cx = std::min(cols - 1, static_cast<std::size_t>((p.x - min_x) / cell));
            auto cy = std::min(rows - 1, static_cast<std::size_t>((p.y - min_y) / cell));
            return std::pair{cx, cy};
        };
        std::vector<std::size_t> start(cols * rows + 1, 0);
        for (const auto& p : points) {
            auto [cx, cy] = cell_of(p);
            ++start[cy * cols + cx + 1];
        }
        for (std::size_t i = 0; i < cols * rows; ++i) start[i + 1] += start[i];
        std::vector<NodeId> bucket(n);
        std::vector<std::size_t> fill(start.begin(), start.end() - 1);
        for (std::size_t i = 0; i < n; ++i) {
            auto [cx, cy] = cell_of(points[i]);
            bucket[fill[cy * cols + cx]++] = static_cast<NodeId>(i);
        }
        const double r2 = radius * radius;
        std::vector<NodeId> found;
        for (std::size_t i = 0; i < n; ++i) {
            auto [cx, cy] = cell_of(points[i]);
            found.clear();
            for (std::size_t y = (cy > 0 ? cy - 1 : 0); y <= std::min(rows - 1, cy + 1); ++y) {
                for (std::size_t x = (cx > 0 ? cx - 1 : 0); x <= std::min(cols - 1, cx + 1); ++x) {
                    for (std::size_t k = start[y * cols + x]; k < start[y * cols + x + 1]; ++k) {
                        NodeId j = bucket[k];
                        if (static_cast<std::size_t>(j) <= i) continue;
                        double dx = points[i].x - points[j].x;
                        double dy = points[i].y - points[j].y;
                        if (dx * dx + dy * dy <= r2) found.push_back(j);
                    }
                }
            }
            std::sort(found.begin(), found.end());
            for (NodeId j : found) edges.emplace_back(static_cast<NodeId>(i), j);
        }
    }
    Graph g = build_graph(n, edges);
    g.coords_.assign(points.begin(), points.end());
    return g;
}

Graph attach_coords(Graph g, std::span<const Point> coords) {
    if (coords.size() != g.node_count())
        throw std::invalid_argument("coordinate count does not match node count");
    g.coords_.assign(coords.begin(), coords.end());
    return g;
}

std::vector<NodeId> articulation_points(const Graph& g, std::span<const NodeId> nodes) {
    Induced h(g, nodes);
    std::vector<char> cut;
    lowlink_dfs(h, cut, false, [](std::vector<NodeId>&&) {});
    std::vector<NodeId> out;
    for (int i = 0; i < h.size(); ++i)
        if (cut[i]) out.push_back(h.global(i));
    return out;
}

bool is_biconnected(const Graph& g, std::span<const NodeId> nodes) {
    Induced h(g, nodes);
    if (h.size() == 0 || h.size() == 2) return false;
    if (h.size() == 1) return true;
    // Connected: one DFS tree, detected by a single block spanning all nodes.
    std::vector<char> cut;
    int blocks = 0;
    std::size_t first_block = 0;
    lowlink_dfs(h, cut, true, [&](std::vector<NodeId>&& b) {
        if (blocks++ == 0) first_block = b.size();
    });
    return blocks == 1 && first_block == static_cast<std::size_t>(h.size());
}

std::vector<std::vector<NodeId>> biconnected_components(const Graph& g,
                                                        std::span<const NodeId> nodes) {
    Induced h(g, nodes);
    std::vector<char> cut;
    std::vector<std::vector<NodeId>> blocks;
    lowlink_dfs(h, cut, true, [&](std::vector<NodeId>&& b) { blocks.push_back(std::move(b)); });
    return blocks;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g,
                                                      std::span<const NodeId> nodes) {
    Induced h(g, nodes);
    std::vector<char> seen(h.size(), 0);
    std::vector<std::vector<NodeId>> comps;
    std::vector<int> frontier;
    for (int s = 0; s < h.size(); ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp;
        seen[s] = 1;
        frontier.assign(1, s);
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            comp.push_back(h.global(v));
            for (int w : h.adj(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    frontier.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

void Instance::validate() const {
    const auto n = graph.node_count();
    if (roots.empty()) throw std::invalid_argument("instance needs at least one root");
    if (capacity < 1) throw std::invalid_argument("capacity must be at least 1");
    std::vector<NodeId> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("roots must be distinct");
    if (sorted.front() < 0 || static_cast<std::size_t>(sorted.back()) >= n)
        throw std::invalid_argument("root id out of range");
    if (known_optimum && (*known_optimum < 0 || static_cast<std::size_t>(*known_optimum) > n))
        throw std::invalid_argument("known optimum must lie in [0, node count]");
}

}  // namespace mbcp
