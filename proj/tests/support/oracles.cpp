#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<char>> adjacency_matrix(const mbcp::Graph& g) {
    std::vector<std::vector<char>> adj(g.node_count(), std::vector<char>(g.node_count(), 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    return adj;
}

namespace {

void collect_paths(const std::vector<std::vector<char>>& adj, const std::vector<char>& allowed, NodeId at,
                   NodeId target, std::vector<char>& on_path, std::vector<NodeId>& path,
                   std::vector<std::vector<NodeId>>& out) {
    if (at == target) {
        out.push_back(path);
        return;
    }
    for (NodeId next = 0; next < static_cast<NodeId>(adj.size()); ++next) {
        if (!adj[at][next] || !allowed[next] || on_path[next]) continue;
        on_path[next] = 1;
        path.push_back(next);
        collect_paths(adj, allowed, next, target, on_path, path, out);
        path.pop_back();
        on_path[next] = 0;
    }
}

bool connected_without(const mbcp::Graph& g, const std::vector<NodeId>& nodes, NodeId skip) {
    std::vector<char> inside(g.node_count(), 0);
    std::size_t count = 0;
    NodeId start = -1;
    for (NodeId v : nodes)
        if (v != skip) {
            inside[v] = 1;
            ++count;
            start = v;
        }
    if (count == 0) return true;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> stack{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (auto [a, b] : g.edges()) {
            NodeId w = a == u ? b : (b == u ? a : -1);
            if (w >= 0 && inside[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == count;
}

}  // namespace

bool two_disjoint_paths(const std::vector<std::vector<char>>& adj, const std::vector<NodeId>& nodes,
                        NodeId a, NodeId b) {
    std::vector<char> allowed(adj.size(), 0);
    for (NodeId v : nodes) allowed[v] = 1;
    std::vector<char> on_path(adj.size(), 0);
    std::vector<NodeId> path{a};
    on_path[a] = 1;
    std::vector<std::vector<NodeId>> paths;
    collect_paths(adj, allowed, a, b, on_path, path, paths);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            const auto& p = paths[i];
            const auto& q = paths[j];
            bool disjoint = true;
            for (std::size_t x = 1; x + 1 < p.size() && disjoint; ++x)
                for (std::size_t y = 1; y + 1 < q.size(); ++y)
                    if (p[x] == q[y]) {
                        disjoint = false;
                        break;
                    }
            // The direct edge may serve as one of the two paths only once.
            if (disjoint && !(p.size() == 2 && q.size() == 2)) return true;
        }
    return false;
}

bool biconnected_by_deletion(const mbcp::Graph& g, const std::vector<NodeId>& nodes) {
    if (nodes.size() == 1) return true;
    if (nodes.size() < 3) return false;
    if (!connected_without(g, nodes, -1)) return false;
    for (NodeId v : nodes)
        if (!connected_without(g, nodes, v)) return false;
    return true;
}

std::vector<NodeId> cut_vertices_by_deletion(const mbcp::Graph& g, const std::vector<NodeId>& nodes) {
    auto components = [&](NodeId skip) {
        std::vector<char> inside(g.node_count(), 0), seen(g.node_count(), 0);
        for (NodeId v : nodes)
            if (v != skip) inside[v] = 1;
        int count = 0;
        for (NodeId s : nodes) {
            if (s == skip || seen[s]) continue;
            ++count;
            std::vector<NodeId> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                NodeId u = stack.back();
                stack.pop_back();
                for (NodeId w : g.neighbors(u))
                    if (inside[w] && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return count;
    };
    const int base = components(-1);
    std::vector<NodeId> out;
    for (NodeId v : nodes)
        if (components(v) > base) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> exact_distance_to_set(const mbcp::Graph& g, const std::vector<char>& in_s,
                                       const std::vector<char>& allowed) {
    std::vector<int> dist(g.node_count(), -1);
    std::deque<NodeId> queue;
    for (NodeId v = 0; v < static_cast<NodeId>(g.node_count()); ++v)
        if (in_s[v]) {
            dist[v] = 0;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(u))
            if (dist[w] < 0 && !in_s[w] && allowed[w]) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int best_subset_sum(int sup, const std::vector<int>& demands) {
    if (demands.size() > 20) throw std::invalid_argument("too many demands for enumeration");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << demands.size()); ++mask) {
        int sum = 0;
        for (std::size_t i = 0; i < demands.size(); ++i)
            if (mask & (1u << i)) sum += demands[i];
        if (sum <= sup) best = std::max(best, sum);
    }
    return best;
}

std::int64_t naive_optimum(const mbcp::Instance& instance) {
    const std::size_t v = instance.graph.node_count();
    const int n = static_cast<int>(instance.roots.size());
    std::vector<std::int32_t> label(v, mbcp::kUnassigned);
    std::vector<char> is_root(v, 0);
    for (int i = 0; i < n; ++i) {
        label[instance.roots[i]] = i;
        is_root[instance.roots[i]] = 1;
    }
    std::vector<NodeId> free_nodes;
    for (NodeId u = 0; u < static_cast<NodeId>(v); ++u)
        if (!is_root[u]) free_nodes.push_back(u);
    std::vector<int> sizes(n, 1);
    std::int64_t best = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == free_nodes.size()) {
            std::vector<std::vector<NodeId>> groups(n);
            for (NodeId u = 0; u < static_cast<NodeId>(v); ++u)
                if (label[u] >= 0) groups[label[u]].push_back(u);
            std::int64_t total = 0;
            for (const auto& grp : groups) {
                if (!biconnected_by_deletion(instance.graph, grp)) return;
                total += static_cast<std::int64_t>(grp.size());
            }
            best = std::max(best, total);
            return;
        }
        const NodeId u = free_nodes[k];
        label[u] = mbcp::kUnassigned;
        rec(k + 1);
        for (int i = 0; i < n; ++i) {
            if (sizes[i] >= instance.capacity) continue;
            label[u] = i;
            ++sizes[i];
            rec(k + 1);
            --sizes[i];
        }
        label[u] = mbcp::kUnassigned;
    };
    rec(0);
    return best;
}

std::set<std::pair<int, int>> nonloc_pairs_by_search(const mbcp::Instance& instance,
                                                     const mbcp::Solution& solution) {
    const auto& g = instance.graph;
    const auto& a = solution.assignment;
    const int n = static_cast<int>(instance.roots.size());
    std::set<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        // Walk from the unassigned neighbors of S_i through unassigned nodes only.
        std::vector<char> seen(g.node_count(), 0);
        std::vector<NodeId> stack;
        for (NodeId u = 0; u < static_cast<NodeId>(g.node_count()); ++u)
            if (a[u] == i)
                for (NodeId w : g.neighbors(u))
                    if (a[w] == mbcp::kUnassigned && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(x)) {
                if (a[w] == mbcp::kUnassigned) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                } else if (a[w] != i) {
                    out.insert({std::min(i, a[w]), std::max(i, a[w])});
                }
            }
        }
    }
    return out;
}

mbcp::Graph random_connected_graph(std::size_t nodes, double extra_edge_prob, mbcp::Rng& rng) {
    std::vector<Edge> edges;
    std::vector<std::vector<char>> has(nodes, std::vector<char>(nodes, 0));
    for (std::size_t v = 1; v < nodes; ++v) {
        NodeId u = static_cast<NodeId>(rng.below(v));
        edges.emplace_back(u, static_cast<NodeId>(v));
        has[u][v] = has[v][u] = 1;
    }
    for (std::size_t u = 0; u < nodes; ++u)
        for (std::size_t v = u + 1; v < nodes; ++v)
            if (!has[u][v] && rng.unit() < extra_edge_prob) edges.emplace_back(u, v);
    return mbcp::build_graph(nodes, edges);
}

mbcp::Instance random_disc_instance(std::size_t nodes, std::size_t roots, int capacity, double radius,
                                    mbcp::Rng& rng) {
    std::vector<mbcp::Point> pts(nodes);
    for (auto& p : pts) p = {rng.unit(), rng.unit()};
    mbcp::Instance inst;
    inst.graph = mbcp::unit_disc_graph(pts, radius);
    std::vector<NodeId> ids(nodes);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids.begin(), ids.end());
    inst.roots.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(roots));
    inst.capacity = capacity;
    return inst;
}

ThreeTriangles three_triangles() {
    std::vector<Edge> edges{{0, 3}, {0, 4}, {3, 4}, {1, 5}, {1, 6}, {5, 6}, {2, 7},  {2, 8},
                            {7, 8}, {6, 7}, {4, 9}, {9, 5}, {3, 10}, {10, 8}};
    ThreeTriangles t;
    t.instance.graph = mbcp::build_graph(11, edges);
    t.instance.roots = {0, 1, 2};
    t.instance.capacity = 4;
    t.solution.assignment = {0, 1, 2, 0, 0, 1, 1, 2, 2, -1, -1};
    t.solution.objective = 9;
    return t;
}

}  // namespace oracle
