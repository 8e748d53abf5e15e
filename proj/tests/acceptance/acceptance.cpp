// Acceptance suite: one PASS/FAIL line per criterion; exit code 1 if any fails.
// Usage: mbcp_acceptance [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mbcp/bench.hpp"
#include "mbcp/instance_gen.hpp"
#include "mbcp/io.hpp"
#include "mbcp/local_search.hpp"
#include "mbcp/solver.hpp"
#include "mbcp/verify.hpp"
#include "oracles.hpp"

using namespace mbcp;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

double err_pct(std::int64_t optimum, std::int64_t found) {
    return static_cast<double>(optimum - found) / static_cast<double>(optimum) * 100.0;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

GeneratedInstance make_instance(int n, int m, double alpha, std::uint64_t seed) {
    GenConfig gc;
    gc.n = n;
    gc.m = m;
    gc.alpha = alpha;
    gc.seed = seed;
    return generate_instance(gc);
}

Outcome feasibility_fuzz() {
    const auto start = Clock::now();
    std::size_t pairs = 0, checked = 0, bad = 0;
    const int ns[] = {2, 3, 4, 5};
    const double alphas[] = {1.5, 2.0};
    std::uint64_t inst_seed = 1000;
    for (int rep = 0; rep < 21; ++rep)
        for (int n : ns)
            for (int m = 5; m <= 10; ++m)
                for (double alpha : alphas) {
                    auto gen = make_instance(n, m, alpha, inst_seed++);
                    SolverConfig cfg;
                    cfg.seed = inst_seed * 7 + static_cast<std::uint64_t>(rep);
                    Rng rng(cfg.seed);
                    Solution first = generate_solution(gen.instance, cfg, rng);
                    ++checked;
                    bad += !verify_solution(gen.instance, first).feasible();
                    const auto mode = rep % 2 ? RegrowMode::Random : RegrowMode::Neighbor;
                    auto res = local_search(gen.instance, cfg, mode, [&](const Solution& s) {
                        ++checked;
                        bad += !verify_solution(gen.instance, s).feasible();
                    });
                    ++checked;
                    bad += !verify_solution(gen.instance, res.best).feasible();
                    ++pairs;
                }
    const double secs = seconds_since(start);
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu pairs, %zu solutions checked, %zu infeasible, %.1f s (limit 120 s)",
                  pairs, checked, bad, secs);
    return {pairs >= 1000 && bad == 0 && secs < 120.0, buf};
}

Outcome oracle_equivalence() {
    std::size_t total = 0, matched = 0, exceeded = 0;
    const std::pair<int, int> shapes[] = {{2, 5}, {2, 6}, {3, 4}, {4, 3}, {3, 3}};
    for (int k = 0; k < 50; ++k) {
        auto [n, m] = shapes[k % 5];
        auto gen = make_instance(n, m, k % 2 ? 1.5 : 2.0, 500 + static_cast<std::uint64_t>(k));
        SolverConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(k);
        auto res = local_search(gen.instance, cfg, RegrowMode::Neighbor);
        const auto opt = brute_force_optimum(gen.instance);
        ++total;
        exceeded += res.best.objective > opt;
        matched += res.best.objective == opt;
    }
    Rng rng(2024);
    for (int k = 0; k < 50; ++k) {
        const std::size_t nodes = 6 + rng.below(7);
        const std::size_t roots = 1 + rng.below(3);
        Instance inst = oracle::random_disc_instance(nodes, roots, static_cast<int>(3 + rng.below(5)),
                                                     rng.uniform(0.3, 0.6), rng);
        SolverConfig cfg;
        cfg.seed = 100 + static_cast<std::uint64_t>(k);
        auto res = local_search(inst, cfg, RegrowMode::Neighbor);
        const auto opt = brute_force_optimum(inst);
        ++total;
        exceeded += res.best.objective > opt;
        matched += res.best.objective == opt;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu instances, matched %zu (%.0f%%, need 80%%), exceeded %zu", total,
                  matched, 100.0 * matched / total, exceeded);
    return {exceeded == 0 && matched * 100 >= 80 * total, buf};
}

Outcome table_row_small() {
    double sum_err = 0.0, worst_secs = 0.0;
    int hits = 0;
    for (int k = 0; k < 40; ++k) {
        auto gen = make_instance(5, 10, 2.0, 1 + static_cast<std::uint64_t>(k));
        SolverConfig cfg;
        cfg.seed = 1 + static_cast<std::uint64_t>(k);
        const auto start = Clock::now();
        auto res = local_search(gen.instance, cfg, RegrowMode::Neighbor);
        worst_secs = std::max(worst_secs, seconds_since(start));
        const double e = err_pct(*gen.instance.known_optimum, res.best.objective);
        sum_err += e;
        hits += e == 0.0;
    }
    const double avg = sum_err / 40.0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "avg error %.3f%% (max 2%%), hits %d/40 (min 32), slowest run %.3f s (max 5 s)",
                  avg, hits, worst_secs);
    return {avg <= 2.0 && hits >= 32 && worst_secs <= 5.0, buf};
}

Outcome neighbor_dominance() {
    double err_n = 0.0, err_r = 0.0;
    for (int k = 0; k < 40; ++k) {
        auto gen = make_instance(25, 10, 2.0, 1 + static_cast<std::uint64_t>(k));
        SolverConfig cfg;
        cfg.seed = 1 + static_cast<std::uint64_t>(k);
        const auto opt = *gen.instance.known_optimum;
        err_n += err_pct(opt, local_search(gen.instance, cfg, RegrowMode::Neighbor).best.objective);
        err_r += err_pct(opt, local_search(gen.instance, cfg, RegrowMode::Random).best.objective);
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "avg error GrowN %.3f%% vs GrowR %.3f%%", err_n / 40.0, err_r / 40.0);
    return {err_n <= err_r, buf};
}

Outcome large_instance() {
    const auto start = Clock::now();
    auto gen = make_instance(100, 100, 2.0, 1);
    const double gen_secs = seconds_since(start);
    SolverConfig cfg;
    cfg.seed = 1;
    const auto solve_start = Clock::now();
    auto res = local_search(gen.instance, cfg, RegrowMode::Neighbor);
    const double solve_secs = seconds_since(solve_start);
    const double total = seconds_since(start);
    const double e = err_pct(*gen.instance.known_optimum, res.best.objective);
    const bool feasible = verify_solution(gen.instance, res.best).feasible();
    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "%zu nodes, error %.3f%% (max 8%%), %lld iterations, generation %.1f s, search %.1f s, "
                  "total %.1f s (max 600 s)%s",
                  gen.instance.graph.node_count(), e, static_cast<long long>(res.stats.iterations), gen_secs,
                  solve_secs, total, feasible ? "" : ", INFEASIBLE");
    return {feasible && e <= 8.0 && total <= 600.0, buf};
}

Outcome distance_admissibility() {
    std::size_t traces = 0, snapshots = 0, checks = 0, violations = 0;
    for (int k = 0; k < 100; ++k) {
        auto gen = make_instance(2 + k % 4, 5 + k % 6, k % 2 ? 1.5 : 2.0, 3000 + static_cast<std::uint64_t>(k));
        const Instance& inst = gen.instance;
        const Graph& g = inst.graph;
        const std::size_t n = g.node_count();
        Rng rng(static_cast<std::uint64_t>(k));
        GrowthState s(g, inst.roots[0], inst.capacity, 0.5);
        std::vector<NodeId> others(inst.roots.begin() + 1, inst.roots.end());
        s.remove_nodes(others);
        s.set_observer([&](const GrowthState& st) {
            ++snapshots;
            std::vector<char> in_s(n, 0), allowed(n, 0);
            for (NodeId v = 0; v < static_cast<NodeId>(n); ++v) {
                in_s[v] = st.in_s(v);
                allowed[v] = st.node(v).available;
            }
            auto exact = oracle::exact_distance_to_set(g, in_s, allowed);
            for (NodeId v = 0; v < static_cast<NodeId>(n); ++v) {
                const auto d = st.distance_to_s(v);
                if (d == kInfDist || in_s[v]) continue;
                ++checks;
                if (exact[v] < 0 || d < static_cast<std::uint32_t>(exact[v])) ++violations;
            }
        });
        // Interleave ears with deletions as another subgraph would cause.
        while (auto ear = s.grow_single_ear(rng)) {
            std::vector<NodeId> taken;
            for (NodeId v = 0; v < static_cast<NodeId>(n); ++v)
                if (!s.in_s(v) && s.node(v).available && rng.unit() < 0.05) taken.push_back(v);
            s.remove_nodes(taken);
        }
        ++traces;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu traces, %zu snapshots, %zu node checks, %zu violations", traces, snapshots,
                  checks, violations);
    return {traces >= 100 && checks > 0 && violations == 0, buf};
}

Outcome ear_invariant() {
    std::size_t runs = 0, ears = 0, violations = 0;
    Rng pick(77);
    for (int k = 0; k < 1000; ++k) {
        Instance inst;
        if (k % 2 == 0) {
            inst = make_instance(2 + k % 4, 5 + k % 6, k % 4 < 2 ? 2.0 : 1.5, 5000 + static_cast<std::uint64_t>(k))
                       .instance;
        } else {
            const std::size_t nodes = 6 + pick.below(30);
            inst = oracle::random_disc_instance(nodes, 1, static_cast<int>(3 + pick.below(12)),
                                                pick.uniform(0.2, 0.5), pick);
        }
        Rng rng(static_cast<std::uint64_t>(k));
        const NodeId root = inst.roots[rng.below(inst.roots.size())];
        GrowthState s(inst.graph, root, inst.capacity, rng.uniform(0.1, 1.0));
        while (s.grow_single_ear(rng)) {
            ++ears;
            std::vector<NodeId> members = s.members();
            const bool ok = s.size() <= static_cast<std::size_t>(inst.capacity) &&
                            oracle::cut_vertices_by_deletion(inst.graph, members).empty() &&
                            oracle::biconnected_by_deletion(inst.graph, members) &&
                            is_biconnected(inst.graph, members);
            violations += !ok;
        }
        ++runs;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu runs, %zu accepted ears, %zu violations", runs, ears, violations);
    return {runs >= 1000 && violations == 0, buf};
}

Outcome reduction_soundness() {
    Rng rng(31337);
    std::size_t total = 0, agree = 0;
    while (total < 50) {
        const int sup = static_cast<int>(rng.between(1, 10));
        const std::size_t count = 1 + rng.below(5);
        std::vector<int> demands;
        int sum = 0;
        for (std::size_t i = 0; i < count; ++i) {
            demands.push_back(static_cast<int>(rng.between(1, sup + 2)));
            sum += demands.back();
        }
        // The exhaustive oracle handles up to 16 nodes: 3 + sum of demands.
        if (3 + sum > static_cast<int>(kOracleMaxNodes)) continue;
        auto red = reduce_mpgsd_star(sup, demands);
        const int best = oracle::best_subset_sum(sup, demands);
        const std::int64_t expected = best > 0 ? 3 + best : 1;
        ++total;
        agree += brute_force_optimum(red.instance) == expected && red.oracle_value == expected;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu/%zu reduced instances match the subset-sum oracle", agree, total);
    return {agree == total, buf};
}

Outcome determinism() {
    std::size_t compared = 0, differ = 0;
    for (int k = 0; k < 6; ++k) {
        const int n = 3 + k, m = 6 + k;
        auto a = make_instance(n, m, 2.0, 900 + static_cast<std::uint64_t>(k));
        auto b = make_instance(n, m, 2.0, 900 + static_cast<std::uint64_t>(k));
        ++compared;
        differ += instance_to_json(a.instance).dump() != instance_to_json(b.instance).dump();
        for (auto mode : {RegrowMode::Neighbor, RegrowMode::Random}) {
            SolverConfig cfg;
            cfg.seed = 40 + static_cast<std::uint64_t>(k);
            auto ra = local_search(a.instance, cfg, mode);
            auto rb = local_search(b.instance, cfg, mode);
            ++compared;
            differ += solution_to_json(ra.best, cfg.seed).dump() != solution_to_json(rb.best, cfg.seed).dump();
        }
    }
    auto spec = bench_spec_from_json(json::parse(
        R"({"pairs":[[5,5],[5,10]],"alpha":2,"instancesPerPair":5,"baseSeed":11,"modes":["R","N"],
            "recordTiming":false})"));
    const std::string csv1 = bench_csv(run_bench(spec), false);
    const std::string csv2 = bench_csv(run_bench(spec), false);
    ++compared;
    differ += csv1 != csv2;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu byte comparisons (instances, solutions, CSV), %zu differ", compared, differ);
    return {differ == 0, buf};
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "feasibility fuzz", feasibility_fuzz},
        {2, "oracle equivalence at tiny scale", oracle_equivalence},
        {3, "small table row (n=5, M=10, alpha=2)", table_row_small},
        {4, "GrowN dominance (n=25, M=10, alpha=2)", neighbor_dominance},
        {5, "large-instance throughput (n=100, M=100)", large_instance},
        {6, "distance estimate admissibility", distance_admissibility},
        {7, "ear-decomposition invariant", ear_invariant},
        {8, "reduction soundness", reduction_soundness},
        {9, "determinism", determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
