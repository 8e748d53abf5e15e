#include "mbcp/local_search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace mbcp {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

void sort_unique(std::vector<std::pair<int, int>>& pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::vector<int> underfull(const Instance& instance, const Solution& solution) {
    auto sizes = solution.sizes(instance.subgraph_count());
    std::vector<int> out;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] < instance.capacity) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

std::string to_string(RegrowMode mode) { return mode == RegrowMode::Random ? "R" : "N"; }

std::vector<NodeId> nonlocated(const Instance& instance, const Solution& solution) {
    (void)instance;
    std::vector<NodeId> out;
    for (std::size_t v = 0; v < solution.assignment.size(); ++v)
        if (solution.assignment[v] == kUnassigned) out.push_back(static_cast<NodeId>(v));
    return out;
}

std::vector<NodeId> subgraph_frontier(const Instance& instance, const Solution& solution, int i) {
    const Graph& g = instance.graph;
    std::vector<char> mark(g.node_count(), 0);
    std::vector<NodeId> out;
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        if (solution.assignment[v] != i) continue;
        for (NodeId w : g.neighbors(static_cast<NodeId>(v)))
            if (solution.assignment[w] != i && !mark[w]) {
                mark[w] = 1;
                out.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

NeighborGraph build_neighbor_graph(const Instance& instance, const Solution& solution) {
    const Graph& g = instance.graph;
    const auto& a = solution.assignment;
    NeighborGraph ng;
    ng.subgraph_count = instance.subgraph_count();
    ng.touches_nonloc.assign(ng.subgraph_count, 0);

    DisjointSets sets(g.node_count());
    for (auto [u, v] : g.edges()) {
        if (a[u] == kUnassigned && a[v] == kUnassigned)
            sets.unite(u, v);
        else if (a[u] != kUnassigned && a[v] != kUnassigned && a[u] != a[v])
            ng.direct.push_back(ordered(a[u], a[v]));
    }
    sort_unique(ng.direct);

    // (component representative, subgraph) for every subgraph bordering a non-located component.
    std::vector<std::pair<std::size_t, int>> borders;
    for (auto [u, v] : g.edges()) {
        if ((a[u] == kUnassigned) == (a[v] == kUnassigned)) continue;
        NodeId free = a[u] == kUnassigned ? u : v;
        int owner = a[u] == kUnassigned ? a[v] : a[u];
        borders.emplace_back(sets.find(free), owner);
        ng.touches_nonloc[owner] = 1;
    }
    std::sort(borders.begin(), borders.end());
    borders.erase(std::unique(borders.begin(), borders.end()), borders.end());
    for (std::size_t lo = 0; lo < borders.size();) {
        std::size_t hi = lo;
        while (hi < borders.size() && borders[hi].first == borders[lo].first) ++hi;
        for (std::size_t x = lo; x < hi; ++x)
            for (std::size_t y = x + 1; y < hi; ++y)
                ng.nonloc.push_back(ordered(borders[x].second, borders[y].second));
        lo = hi;
    }
    sort_unique(ng.nonloc);

    ng.all = ng.direct;
    ng.all.insert(ng.all.end(), ng.nonloc.begin(), ng.nonloc.end());
    sort_unique(ng.all);
    ng.adjacency.assign(ng.subgraph_count, {});
    for (auto [i, j] : ng.all) {
        ng.adjacency[i].push_back(j);
        ng.adjacency[j].push_back(i);
    }
    return ng;
}

std::optional<RegrowSet> select_regrow_set(const Instance& instance, const Solution& solution,
                                           const NeighborGraph& neighbors, int m, RegrowMode mode,
                                           const SolverConfig& config, Rng& rng,
                                           std::optional<int> seed) {
    const int n = static_cast<int>(instance.subgraph_count());
    if (!seed) {
        auto candidates = underfull(instance, solution);
        if (candidates.empty()) return std::nullopt;
        seed = candidates[rng.below(candidates.size())];
    }
    const int i = *seed;
    if (i < 0 || i >= n) return std::nullopt;
    if (solution.sizes(n)[i] >= instance.capacity) return std::nullopt;
    const auto& touches = neighbors.touches_nonloc;

    if (mode == RegrowMode::Random) {
        const std::size_t target = static_cast<std::size_t>(std::clamp(m, 1, n));
        RegrowSet set;
        set.members.push_back(i);
        std::vector<int> touchers;
        for (int j = 0; j < n; ++j)
            if (j != i && touches[j]) touchers.push_back(j);
        if (!touchers.empty())
            set.members.push_back(touchers[rng.below(touchers.size())]);
        else if (!touches[i])
            return std::nullopt;
        std::vector<int> rest;
        for (int k = 0; k < n; ++k)
            if (std::find(set.members.begin(), set.members.end(), k) == set.members.end())
                rest.push_back(k);
        while (set.members.size() < target && !rest.empty()) {
            std::size_t pick = rng.below(rest.size());
            set.members.push_back(rest[pick]);
            rest[pick] = rest.back();
            rest.pop_back();
        }
        return set;
    }

    int target = std::clamp(m, 1, n);
    int attempts = 0;
    std::vector<char> in_set(n), queued(n);
    while (true) {
        std::fill(in_set.begin(), in_set.end(), 0);
        std::fill(queued.begin(), queued.end(), 0);
        RegrowSet set;
        set.members.push_back(i);
        in_set[i] = 1;
        std::vector<int> candidates;
        auto offer = [&](int x) {
            for (int y : neighbors.adjacency[x])
                if (!in_set[y] && !queued[y]) {
                    queued[y] = 1;
                    candidates.push_back(y);
                }
        };
        offer(i);
        while (static_cast<int>(set.members.size()) < target && !candidates.empty()) {
            std::size_t pick = rng.below(candidates.size());
            int x = candidates[pick];
            candidates[pick] = candidates.back();
            candidates.pop_back();
            set.members.push_back(x);
            in_set[x] = 1;
            offer(x);
        }
        bool reaches = std::any_of(set.members.begin(), set.members.end(),
                                   [&](int x) { return touches[x] != 0; });
        if (reaches) return set;
        // The whole connected part of the neighborhood graph is in the set.
        if (candidates.empty()) return std::nullopt;
        if (++attempts >= config.grow_n_attempts) {
            attempts = 0;
            if (++target > n) return std::nullopt;
        }
    }
}

Solution regrow_partial(const Instance& instance, const Solution& best, const RegrowSet& set,
                        const SolverConfig& config, Rng& rng) {
    const std::size_t n = instance.graph.node_count();
    std::vector<char> regrown(instance.subgraph_count(), 0);
    for (int i : set.members) regrown.at(i) = 1;

    Solution out = best;
    std::vector<NodeId> pool_nodes;
    for (std::size_t v = 0; v < n; ++v) {
        const std::int32_t a = best.assignment[v];
        if (a == kUnassigned || regrown[a]) {
            pool_nodes.push_back(static_cast<NodeId>(v));
            out.assignment[v] = kUnassigned;
        }
    }
    grow_subgraphs(instance, NodePool::of(n, std::move(pool_nodes)), set.members, config, rng,
                   out.assignment);
    out.objective = out.count_assigned();
    return out;
}

LocalSearchResult local_search(const Instance& instance, const SolverConfig& config, RegrowMode mode,
                               const CandidateObserver& observer) {
    config.validate();
    instance.validate();
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    Rng rng(config.seed);
    LocalSearchResult result;
    result.best = generate_solution(instance, config, rng);
    if (observer) observer(result.best);
    result.best_trace.push_back(result.best.objective);
    auto& stats = result.stats;
    stats.seed = config.seed;
    stats.mode = mode;
    stats.iterations = 1;
    stats.iteration_of_best = 1;
    stats.millis_to_best = elapsed_ms();

    NeighborGraph neighbors = build_neighbor_graph(instance, result.best);
    std::int64_t stagnation = 0;
    while (stats.iterations < config.max_iterations && stagnation < config.stagnation_limit) {
        auto open = underfull(instance, result.best);
        const bool reachable = std::any_of(neighbors.touches_nonloc.begin(),
                                           neighbors.touches_nonloc.end(),
                                           [](char t) { return t != 0; });
        if (open.empty() || !reachable) break;

        const int m = static_cast<int>(rng.between(2, std::max(2, config.regrow_size)));
        const int seed = open[rng.below(open.size())];
        auto set = select_regrow_set(instance, result.best, neighbors, m, mode, config, rng, seed);
        if (!set) {
            ++stagnation;
            continue;
        }
        Solution candidate = regrow_partial(instance, result.best, *set, config, rng);
        ++stats.iterations;
        if (observer) observer(candidate);
        if (candidate.objective >= result.best.objective) {
            if (candidate.objective > result.best.objective) {
                stagnation = 0;
                stats.iteration_of_best = stats.iterations;
                stats.millis_to_best = elapsed_ms();
            } else {
                ++stagnation;
            }
            result.best = std::move(candidate);
            result.best_trace.push_back(result.best.objective);
            neighbors = build_neighbor_graph(instance, result.best);
        } else {
            ++stagnation;
        }
    }
    stats.best_objective = result.best.objective;
    stats.wall_millis = elapsed_ms();
    return result;
}

}  // namespace mbcp
