#include "mbcp/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace mbcp {

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::RootCount: return "root-count";
        case ViolationKind::Capacity: return "capacity";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::Biconnectivity: return "biconnectivity";
    }
    return "unknown";
}

VerifyReport verify_solution(const Instance& instance, const Solution& solution) {
    const Graph& g = instance.graph;
    const std::size_t n = instance.subgraph_count();
    if (solution.assignment.size() != g.node_count())
        throw std::invalid_argument("assignment length " + std::to_string(solution.assignment.size()) +
                                    " does not match node count " + std::to_string(g.node_count()));
    for (std::int32_t a : solution.assignment)
        if (a < kUnassigned || a >= static_cast<std::int32_t>(n))
            throw std::invalid_argument("subgraph index out of range: " + std::to_string(a));

    VerifyReport report;
    report.objective = solution.count_assigned();
    // One assignment slot per node rules out overlap; nothing to report for it.
    auto members = solution.members(n);
    std::vector<int> root_owner(g.node_count(), -1);
    for (std::size_t i = 0; i < n; ++i) root_owner[instance.roots[i]] = static_cast<int>(i);

    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = members[i];
        const int sub = static_cast<int>(i);
        int roots_inside = 0;
        bool own_root = false;
        for (NodeId v : s)
            if (root_owner[v] >= 0) {
                ++roots_inside;
                own_root = own_root || root_owner[v] == sub;
            }
        if (roots_inside != 1 || !own_root)
            report.violations.push_back({ViolationKind::RootCount, sub,
                                         "holds " + std::to_string(roots_inside) + " roots" +
                                             (own_root ? "" : ", not including its own")});
        if (s.size() > static_cast<std::size_t>(instance.capacity))
            report.violations.push_back({ViolationKind::Capacity, sub,
                                         "size " + std::to_string(s.size()) + " exceeds " +
                                             std::to_string(instance.capacity)});
        if (!s.empty() && !is_biconnected(g, s))
            report.violations.push_back(
                {ViolationKind::Biconnectivity, sub,
                 "induced subgraph of " + std::to_string(s.size()) + " nodes is not bi-connected"});
    }
    return report;
}

namespace {

using Mask = std::uint32_t;

Mask reach(const std::vector<Mask>& adj, Mask set, int start) {
    Mask seen = Mask{1} << start;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= set & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool connected(const std::vector<Mask>& adj, Mask set) {
    return set == 0 || reach(adj, set, std::countr_zero(set)) == set;
}

bool biconnected_mask(const std::vector<Mask>& adj, Mask set) {
    const int k = std::popcount(set);
    if (k == 1) return true;
    if (k == 2 || !connected(adj, set)) return false;
    for (Mask f = set; f; f &= f - 1)
        if (!connected(adj, set & ~(Mask{1} << std::countr_zero(f)))) return false;
    return true;
}

}  // namespace

std::int64_t brute_force_optimum(const Instance& instance) {
    const Graph& g = instance.graph;
    const std::size_t v = g.node_count();
    if (v > kOracleMaxNodes)
        throw OracleSizeError("oracle limited to " + std::to_string(kOracleMaxNodes) + " nodes, got " +
                              std::to_string(v));
    instance.validate();
    std::vector<Mask> adj(v, 0);
    for (auto [a, b] : g.edges()) {
        adj[a] |= Mask{1} << b;
        adj[b] |= Mask{1} << a;
    }
    Mask root_bits = 0;
    for (NodeId r : instance.roots) root_bits |= Mask{1} << r;
    const Mask free_bits = ((Mask{1} << v) - 1) & ~root_bits;
    const int cap = instance.capacity;

    // Feasible node sets per root, largest first.
    const std::size_t n = instance.roots.size();
    std::vector<std::vector<Mask>> options(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Mask rb = Mask{1} << instance.roots[i];
        // Enumerate every subset of the free nodes.
        for (Mask sub = free_bits;; sub = (sub - 1) & free_bits) {
            if (std::popcount(sub) + 1 <= cap && biconnected_mask(adj, sub | rb))
                options[i].push_back(sub | rb);
            if (sub == 0) break;
        }
        std::stable_sort(options[i].begin(), options[i].end(),
                         [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
    }
    std::vector<int> suffix_best(n + 1, 0);
    for (std::size_t i = n; i-- > 0;)
        suffix_best[i] = suffix_best[i + 1] + std::popcount(options[i].front());

    std::int64_t best = 0;
    std::function<void(std::size_t, Mask, int)> search = [&](std::size_t i, Mask used, int total) {
        if (i == n) {
            best = std::max<std::int64_t>(best, total);
            return;
        }
        if (total + suffix_best[i] <= best) return;
        for (Mask option : options[i]) {
            if (option & used) continue;
            if (total + std::popcount(option) + suffix_best[i + 1] <= best) break;
            search(i + 1, used | option, total + std::popcount(option));
        }
    };
    search(0, 0, 0);
    return best;
}

}  // namespace mbcp
