#include <doctest.h>

#include "mbcp/instance_gen.hpp"
#include "mbcp/verify.hpp"
#include "oracles.hpp"

using namespace mbcp;

namespace {

Instance make(std::size_t n, std::vector<Edge> e, std::vector<NodeId> roots, int cap) {
    Instance inst;
    inst.graph = build_graph(n, e);
    inst.roots = std::move(roots);
    inst.capacity = cap;
    return inst;
}

bool has_kind(const VerifyReport& r, ViolationKind k) {
    for (const auto& v : r.violations)
        if (v.kind == k) return true;
    return false;
}

}  // namespace

TEST_CASE("verify flags each violation kind") {
    Instance inst = make(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}}, {0, 5}, 3);
    Solution ok;
    ok.assignment = {0, 0, 0, -1, -1, 1};
    auto r = verify_solution(inst, ok);
    CHECK(r.feasible());
    CHECK(r.objective == 4);

    Solution big;
    big.assignment = {0, 0, 0, 0, -1, 1};
    CHECK(has_kind(verify_solution(inst, big), ViolationKind::Capacity));

    Solution path;
    path.assignment = {-1, -1, 1, 1, 1, 1};
    path.assignment[0] = 0;
    Instance roomy = inst;
    roomy.capacity = 4;
    CHECK(has_kind(verify_solution(roomy, path), ViolationKind::Biconnectivity));

    Solution stolen;
    stolen.assignment = {1, -1, -1, -1, -1, 1};
    auto rs = verify_solution(inst, stolen);
    CHECK(has_kind(rs, ViolationKind::RootCount));
    CHECK_FALSE(rs.feasible());

    Solution short_one;
    short_one.assignment = {0, 0};
    CHECK_THROWS_AS(verify_solution(inst, short_one), std::invalid_argument);
    Solution bad_index;
    bad_index.assignment = {0, 0, 0, -1, 7, 1};
    CHECK_THROWS_AS(verify_solution(inst, bad_index), std::invalid_argument);
}

TEST_CASE("brute force optimum on hand-sized cases") {
    Instance tri = make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, {0, 3}, 3);
    CHECK(brute_force_optimum(tri) == 6);
    Instance c5 = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {0}, 4);
    CHECK(brute_force_optimum(c5) == 1);
    Instance k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0}, 3);
    CHECK(brute_force_optimum(k4) == 3);

    std::vector<Edge> none;
    Instance large = make(17, none, {0}, 3);
    CHECK_THROWS_AS(brute_force_optimum(large), OracleSizeError);
}

TEST_CASE("brute force equals the naive enumeration") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t nodes = 4 + rng.below(6);
        const std::size_t roots = 1 + rng.below(3);
        Instance inst = oracle::random_disc_instance(nodes, roots, static_cast<int>(3 + rng.below(4)),
                                                     rng.uniform(0.3, 0.7), rng);
        CHECK(brute_force_optimum(inst) == oracle::naive_optimum(inst));
    }
}

TEST_CASE("certificates of generated instances are optimal") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenConfig gc;
        gc.n = 2 + static_cast<int>(seed % 2);
        gc.m = 5;
        gc.seed = seed;
        auto gen = generate_instance(gc);
        auto r = verify_solution(gen.instance, gen.certificate());
        CHECK(r.feasible());
        CHECK(r.objective == gc.n * gc.m);
        if (gen.instance.graph.node_count() <= kOracleMaxNodes)
            CHECK(brute_force_optimum(gen.instance) == gc.n * gc.m);
    }
}
