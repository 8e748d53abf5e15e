#include "mbcp/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbcp {

std::int64_t Solution::count_assigned() const {
    return std::count_if(assignment.begin(), assignment.end(),
                         [](std::int32_t a) { return a != kUnassigned; });
}

std::vector<int> Solution::sizes(std::size_t subgraphs) const {
    std::vector<int> out(subgraphs, 0);
    for (std::int32_t a : assignment)
        if (a >= 0 && static_cast<std::size_t>(a) < subgraphs) ++out[a];
    return out;
}

std::vector<std::vector<NodeId>> Solution::members(std::size_t subgraphs) const {
    std::vector<std::vector<NodeId>> out(subgraphs);
    for (std::size_t v = 0; v < assignment.size(); ++v) {
        std::int32_t a = assignment[v];
        if (a >= 0 && static_cast<std::size_t>(a) < subgraphs) out[a].push_back(static_cast<NodeId>(v));
    }
    return out;
}

std::int64_t objective(const Solution& solution) { return solution.count_assigned(); }

void SolverConfig::validate() const {
    if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 must lie in [0, 1]");
    if (max_exp_length < 1 || regrow_size < 1 || max_iterations < 1 || stagnation_limit < 1 ||
        grow_n_attempts < 1)
        throw std::invalid_argument("solver limits must be positive");
}

void grow_subgraphs(const Instance& instance, std::shared_ptr<const NodePool> pool,
                    std::span<const int> subgraphs, const SolverConfig& config, Rng& rng,
                    std::vector<std::int32_t>& assignment) {
    const Graph& g = instance.graph;
    const int capacity = instance.capacity;

    std::vector<GrowthState> states;
    states.reserve(subgraphs.size());
    std::vector<NodeId> roots;
    for (int idx : subgraphs) {
        roots.push_back(instance.roots.at(idx));
        states.emplace_back(g, instance.roots[idx], capacity, config.p0, pool);
    }
    // Each root is off limits to every other subgraph.
    std::vector<NodeId> others;
    for (std::size_t k = 0; k < states.size(); ++k) {
        others.clear();
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (j != k) others.push_back(roots[j]);
        states[k].remove_nodes(others);
    }

    std::vector<std::size_t> active(states.size());
    for (std::size_t k = 0; k < active.size(); ++k) active[k] = k;
    const std::int64_t max_len = std::max(2, config.max_exp_length);

    while (!active.empty()) {
        const std::int64_t max_l = rng.between(2, max_len);
        const std::size_t pos = rng.below(active.size());
        const std::size_t k = active[pos];
        std::int64_t added = 0;
        bool retire = false;
        while (true) {
            auto ear = states[k].grow_single_ear(rng);
            if (!ear) {
                retire = true;
                break;
            }
            for (std::size_t j : active)
                if (j != k) states[j].remove_nodes(ear->fresh);
            added += static_cast<std::int64_t>(ear->fresh.size());
            if (states[k].size() >= static_cast<std::size_t>(capacity)) {
                retire = true;
                break;
            }
            if (added >= max_l) break;
        }
        if (retire) active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
    }

    for (std::size_t k = 0; k < states.size(); ++k)
        for (NodeId v : states[k].members()) assignment[v] = subgraphs[k];
}

Solution generate_solution(const Instance& instance, const SolverConfig& config, Rng& rng) {
    config.validate();
    const std::size_t n = instance.graph.node_count();
    Solution s;
    s.assignment.assign(n, kUnassigned);
    std::vector<int> all(instance.roots.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    grow_subgraphs(instance, NodePool::all(n), all, config, rng, s.assignment);
    s.objective = s.count_assigned();
    return s;
}

}  // namespace mbcp
